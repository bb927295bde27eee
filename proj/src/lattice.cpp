#include "kslogic/lattice.hpp"

#include "kslogic/error.hpp"

namespace kslogic {

namespace {

void require_same_dim(const LatticeElement& a, const LatticeElement& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("lattice elements of different dimension");
}

}  // namespace

LatticeElement::LatticeElement(Projector projector)
    : projector_(std::move(projector)), range_(range_basis(projector_.matrix())) {}

LatticeElement LatticeElement::top(std::size_t dim) {
  return LatticeElement(Projector(ExactMatrix::identity(dim), "1"));
}

LatticeElement LatticeElement::bottom(std::size_t dim) {
  return LatticeElement(Projector(ExactMatrix::zero(dim), "0"));
}

LatticeElement LatticeElement::from_subspace(const SubspaceBasis& s, std::string label) {
  return LatticeElement(Projector(subspace_projector(s), std::move(label)));
}

bool leq(const LatticeElement& a, const LatticeElement& b) {
  require_same_dim(a, b);
  return is_subspace(a.range(), b.range());
}

LatticeElement meet(const LatticeElement& a, const LatticeElement& b) {
  require_same_dim(a, b);
  return LatticeElement::from_subspace(intersect(a.range(), b.range()),
                                       "meet(" + a.label() + "," + b.label() + ")");
}

LatticeElement join(std::span<const LatticeElement> elems) {
  if (elems.empty()) throw InvalidOperand("join of an empty list");
  if (elems.size() == 1) return elems.front();
  SubspaceBasis acc = elems.front().range();
  std::string label = "join(" + elems.front().label();
  for (std::size_t k = 1; k < elems.size(); ++k) {
    require_same_dim(elems.front(), elems[k]);
    acc = kslogic::join(acc, elems[k].range());
    label += "," + elems[k].label();
  }
  return LatticeElement::from_subspace(acc, label + ")");
}

LatticeElement join(const LatticeElement& a, const LatticeElement& b) {
  const LatticeElement pair[] = {a, b};
  return join(pair);
}

LatticeElement orthocomplement(const LatticeElement& a) {
  return LatticeElement(Projector(ExactMatrix::identity(a.dim()) - a.matrix(), "not(" + a.label() + ")"));
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Tautology: return "tautology";
    case Classification::Contradiction: return "contradiction";
    case Classification::Contingent: return "contingent";
  }
  return "?";
}

Classification classify_constant(const LatticeElement& a) {
  if (a.is_top()) return Classification::Tautology;
  if (a.is_bottom()) return Classification::Contradiction;
  return Classification::Contingent;
}

}  // namespace kslogic
