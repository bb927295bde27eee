#pragma once

// The bounded lattice of projector ranges. Elements carry both the
// projector and its canonical range basis; order is inclusion of ranges,
// meet is intersection and join is the span of the union.

#include <span>
#include <string>

#include "kslogic/model.hpp"

namespace kslogic {

class LatticeElement {
 public:
  explicit LatticeElement(Projector projector);

  static LatticeElement top(std::size_t dim);
  static LatticeElement bottom(std::size_t dim);
  /// The orthogonal projector onto s, labelled with label.
  static LatticeElement from_subspace(const SubspaceBasis& s, std::string label);

  const Projector& projector() const noexcept { return projector_; }
  const ExactMatrix& matrix() const noexcept { return projector_.matrix(); }
  const std::string& label() const noexcept { return projector_.label(); }
  const SubspaceBasis& range() const noexcept { return range_; }
  std::size_t dim() const noexcept { return projector_.dim(); }

  bool is_bottom() const noexcept { return range_.empty(); }
  bool is_top() const noexcept { return range_.dimension() == range_.ambient_dim(); }

  /// Same subspace (labels are not compared).
  friend bool operator==(const LatticeElement& a, const LatticeElement& b) { return a.range_ == b.range_; }

 private:
  Projector projector_;
  SubspaceBasis range_;
};

bool leq(const LatticeElement& a, const LatticeElement& b);
LatticeElement meet(const LatticeElement& a, const LatticeElement& b);
/// Throws InvalidOperand for an empty list.
LatticeElement join(std::span<const LatticeElement> elems);
LatticeElement join(const LatticeElement& a, const LatticeElement& b);
/// 1 - P; its range is ker(P).
LatticeElement orthocomplement(const LatticeElement& a);

enum class Classification { Tautology, Contradiction, Contingent };

const char* to_string(Classification c);
Classification classify_constant(const LatticeElement& a);

}  // namespace kslogic
