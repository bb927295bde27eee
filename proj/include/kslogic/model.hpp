#pragma once

// The two-qubit spin model: Pauli eigenvector rays, prepared product
// states, the twelve product projectors and their three contexts.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kslogic/linalg.hpp"

namespace kslogic {

enum class Axis { Z, X, Y };
enum class Sign { Plus, Minus };

/// Canonical iteration orders: z, x, y and +, -.
inline constexpr std::array<Axis, 3> kAxes{Axis::Z, Axis::X, Axis::Y};
inline constexpr std::array<Sign, 2> kSigns{Sign::Plus, Sign::Minus};

char to_char(Axis a);
char to_char(Sign s);
std::optional<Axis> axis_from_char(char c);
std::optional<Sign> sign_from_char(char c);

/// Unnormalized nonzero vector standing for a one-dimensional subspace.
class Ray {
 public:
  /// Throws InvalidOperand for the null vector.
  explicit Ray(ExactVector vector);

  const ExactVector& vector() const noexcept { return vector_; }
  const Rational& norm_sq() const noexcept { return norm_sq_; }

 private:
  ExactVector vector_;
  Rational norm_sq_;
};

/// Eigenvector of sigma_axis for eigenvalue sign, first nonzero component 1:
/// z+ (1,0), z- (0,1), x+- (1,+-1), y+- (1,+-i).
Ray pauli_eigenvector(Axis axis, Sign sign);

struct ProjectorIndex {
  Axis axis;
  Sign alpha;
  Sign beta;

  friend bool operator==(const ProjectorIndex&, const ProjectorIndex&) = default;
};

/// "P_" followed by axis and the two signs, e.g. "P_y+-".
std::string projector_label(const ProjectorIndex& index);

/// A validated orthogonal projector with a proposition label.
class Projector {
 public:
  /// Throws InvalidOperand unless is_projector(matrix).
  Projector(ExactMatrix matrix, std::string label, std::optional<ProjectorIndex> index = std::nullopt);

  const ExactMatrix& matrix() const noexcept { return matrix_; }
  const std::string& label() const noexcept { return label_; }
  const std::optional<ProjectorIndex>& index() const noexcept { return index_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

 private:
  ExactMatrix matrix_;
  std::string label_;
  std::optional<ProjectorIndex> index_;
};

/// A named family of projectors meant to resolve the identity. Nothing is
/// enforced on construction; validate_context() reports what holds.
struct Context {
  std::string name;
  std::vector<Projector> members;
};

class OperatorSet {
 public:
  /// Throws DimensionMismatch if a member is not ambient_dim x ambient_dim and
  /// InvalidOperand if one label is used for two different matrices.
  OperatorSet(std::size_t ambient_dim, std::vector<Context> contexts);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<Context>& contexts() const noexcept { return contexts_; }

  /// Distinct labels in order of first appearance, with their projector.
  std::vector<const Projector*> distinct_members() const;
  const Projector* find(std::string_view label) const;
  const Context* find_context(std::string_view name) const;

 private:
  std::size_t ambient_dim_;
  std::vector<Context> contexts_;
};

/// P_{j alpha beta} = |j alpha><j alpha| (x) |j beta><j beta|.
Projector build_projector(Axis axis, Sign alpha, Sign beta);
/// Context "C_j" with members in sign order ++, +-, -+, --.
Context build_context(Axis axis);
/// The twelve-projector set with contexts C_z, C_x, C_y.
OperatorSet build_set_o();

/// A state vector, optionally tagged with the indices of the product state
/// |j alpha> (x) |k beta> it was prepared as.
struct StateIndices {
  Axis j;
  Sign alpha;
  Axis k;
  Sign beta;

  friend bool operator==(const StateIndices&, const StateIndices&) = default;
};

/// "z+x-" style code; nullopt if the text is not exactly such a code.
std::optional<StateIndices> parse_state_code(std::string_view code);
std::string state_code(const StateIndices& s);

class PreparedState {
 public:
  /// Explicit vector. Throws InvalidOperand for the null vector.
  explicit PreparedState(ExactVector vector, std::string name = "explicit");

  const ExactVector& vector() const noexcept { return vector_; }
  const Rational& norm_sq() const noexcept { return norm_sq_; }
  const std::string& name() const noexcept { return name_; }
  const std::optional<StateIndices>& indices() const noexcept { return indices_; }
  /// True for product states with j == k; false for explicit vectors.
  bool correlated() const noexcept { return indices_ && indices_->j == indices_->k; }

 private:
  friend PreparedState build_state(Axis, Sign, Axis, Sign);

  ExactVector vector_;
  Rational norm_sq_;
  std::string name_;
  std::optional<StateIndices> indices_;
};

PreparedState build_state(Axis j, Sign alpha, Axis k, Sign beta);
PreparedState build_state(const StateIndices& s);
/// All 36 product states, ordered by j, alpha, k, beta in canonical order.
std::vector<PreparedState> all_prepared_states();

struct ContextValidation {
  std::string name;
  bool all_projectors = true;
  bool complete = false;    // members sum to the identity
  bool orthogonal = true;   // every pairwise product is zero
  std::vector<std::string> non_orthogonal_pairs;  // "A*B"
  bool valid() const noexcept { return all_projectors && complete && orthogonal; }
};

ContextValidation validate_context(const Context& c);

struct CommutationEntry {
  std::string first;
  std::string second;
  bool cross_context;
  bool commutes;
};

/// Every unordered pair of distinct labels, in order of first appearance.
/// A pair is cross-context when no context contains both.
std::vector<CommutationEntry> commutation_report(const OperatorSet& s);

}  // namespace kslogic
