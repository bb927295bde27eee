#include "kslogic/model.hpp"

#include <map>

#include "kslogic/error.hpp"

namespace kslogic {

char to_char(Axis a) {
  switch (a) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    case Axis::Z: return 'z';
  }
  return '?';
}

char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

std::optional<Axis> axis_from_char(char c) {
  switch (c) {
    case 'x': return Axis::X;
    case 'y': return Axis::Y;
    case 'z': return Axis::Z;
    default: return std::nullopt;
  }
}

std::optional<Sign> sign_from_char(char c) {
  if (c == '+') return Sign::Plus;
  if (c == '-') return Sign::Minus;
  return std::nullopt;
}

Ray::Ray(ExactVector vector) : vector_(std::move(vector)) {
  if (vector_.is_zero()) throw InvalidOperand("a ray must be different from the null vector");
  norm_sq_ = kslogic::norm_sq(vector_);
}

Ray pauli_eigenvector(Axis axis, Sign sign) {
  const GaussianRational s = sign == Sign::Plus ? 1 : -1;
  switch (axis) {
    case Axis::Z: return Ray(sign == Sign::Plus ? ExactVector{1, 0} : ExactVector{0, 1});
    case Axis::X: return Ray(ExactVector{1, s});
    case Axis::Y: return Ray(ExactVector{1, s * GaussianRational::i()});
  }
  throw InvalidOperand("unknown axis");
}

std::string projector_label(const ProjectorIndex& index) {
  return std::string("P_") + to_char(index.axis) + to_char(index.alpha) + to_char(index.beta);
}

Projector::Projector(ExactMatrix matrix, std::string label, std::optional<ProjectorIndex> index)
    : matrix_(std::move(matrix)), label_(std::move(label)), index_(index) {
  if (!is_projector(matrix_)) throw InvalidOperand("'" + label_ + "' is not an orthogonal projector");
}

OperatorSet::OperatorSet(std::size_t ambient_dim, std::vector<Context> contexts)
    : ambient_dim_(ambient_dim), contexts_(std::move(contexts)) {
  if (ambient_dim_ == 0) throw InvalidOperand("ambient dimension must be positive");
  std::map<std::string, const ExactMatrix*> seen;
  for (const auto& c : contexts_) {
    for (const auto& p : c.members) {
      if (p.dim() != ambient_dim_) {
        throw DimensionMismatch("member '" + p.label() + "' of context '" + c.name + "' is " +
                                std::to_string(p.dim()) + "x" + std::to_string(p.dim()) + ", expected " +
                                std::to_string(ambient_dim_) + "x" + std::to_string(ambient_dim_));
      }
      auto [it, inserted] = seen.emplace(p.label(), &p.matrix());
      if (!inserted && *it->second != p.matrix()) {
        throw InvalidOperand("label '" + p.label() + "' names two different matrices");
      }
    }
  }
}

std::vector<const Projector*> OperatorSet::distinct_members() const {
  std::vector<const Projector*> out;
  std::map<std::string_view, bool> seen;
  for (const auto& c : contexts_) {
    for (const auto& p : c.members) {
      if (seen.emplace(p.label(), true).second) out.push_back(&p);
    }
  }
  return out;
}

const Projector* OperatorSet::find(std::string_view label) const {
  for (const auto& c : contexts_) {
    for (const auto& p : c.members) {
      if (p.label() == label) return &p;
    }
  }
  return nullptr;
}

const Context* OperatorSet::find_context(std::string_view name) const {
  for (const auto& c : contexts_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Projector build_projector(Axis axis, Sign alpha, Sign beta) {
  // Built from unnormalized rays; dividing by the squared norm keeps every
  // entry in Q(i).
  const Ray first = pauli_eigenvector(axis, alpha);
  const Ray second = pauli_eigenvector(axis, beta);
  const ProjectorIndex index{axis, alpha, beta};
  return Projector(ray_projector(tensor(first.vector(), second.vector())), projector_label(index), index);
}

Context build_context(Axis axis) {
  Context c{std::string("C_") + to_char(axis), {}};
  for (Sign alpha : kSigns) {
    for (Sign beta : kSigns) c.members.push_back(build_projector(axis, alpha, beta));
  }
  return c;
}

OperatorSet build_set_o() {
  std::vector<Context> contexts;
  for (Axis a : kAxes) contexts.push_back(build_context(a));
  return OperatorSet(4, std::move(contexts));
}

std::optional<StateIndices> parse_state_code(std::string_view code) {
  if (code.size() != 4) return std::nullopt;
  const auto j = axis_from_char(code[0]);
  const auto alpha = sign_from_char(code[1]);
  const auto k = axis_from_char(code[2]);
  const auto beta = sign_from_char(code[3]);
  if (!j || !alpha || !k || !beta) return std::nullopt;
  return StateIndices{*j, *alpha, *k, *beta};
}

std::string state_code(const StateIndices& s) {
  return {to_char(s.j), to_char(s.alpha), to_char(s.k), to_char(s.beta)};
}

PreparedState::PreparedState(ExactVector vector, std::string name)
    : vector_(std::move(vector)), name_(std::move(name)) {
  if (vector_.is_zero()) throw InvalidOperand("a state vector must be different from the null vector");
  norm_sq_ = kslogic::norm_sq(vector_);
}

PreparedState build_state(Axis j, Sign alpha, Axis k, Sign beta) {
  const StateIndices idx{j, alpha, k, beta};
  PreparedState s(tensor(pauli_eigenvector(j, alpha).vector(), pauli_eigenvector(k, beta).vector()),
                  state_code(idx));
  s.indices_ = idx;
  return s;
}

PreparedState build_state(const StateIndices& s) { return build_state(s.j, s.alpha, s.k, s.beta); }

std::vector<PreparedState> all_prepared_states() {
  std::vector<PreparedState> out;
  for (Axis j : kAxes) {
    for (Sign alpha : kSigns) {
      for (Axis k : kAxes) {
        for (Sign beta : kSigns) out.push_back(build_state(j, alpha, k, beta));
      }
    }
  }
  return out;
}

ContextValidation validate_context(const Context& c) {
  ContextValidation report;
  report.name = c.name;
  if (c.members.empty()) {
    report.all_projectors = false;
    return report;
  }
  const std::size_t n = c.members.front().dim();
  bool same_shape = true;
  for (const auto& p : c.members) {
    if (p.dim() != n) same_shape = false;
    if (!is_projector(p.matrix())) report.all_projectors = false;
  }
  if (!same_shape) {
    report.all_projectors = false;
    report.orthogonal = false;
    return report;
  }

  ExactMatrix total = ExactMatrix::zero(n);
  for (const auto& p : c.members) total += p.matrix();
  report.complete = total == ExactMatrix::identity(n);

  for (std::size_t a = 0; a < c.members.size(); ++a) {
    for (std::size_t b = a + 1; b < c.members.size(); ++b) {
      const auto& pa = c.members[a].matrix();
      const auto& pb = c.members[b].matrix();
      if (!matmul(pa, pb).is_zero() || !matmul(pb, pa).is_zero()) {
        report.orthogonal = false;
        report.non_orthogonal_pairs.push_back(c.members[a].label() + "*" + c.members[b].label());
      }
    }
  }
  return report;
}

std::vector<CommutationEntry> commutation_report(const OperatorSet& s) {
  const auto members = s.distinct_members();
  auto share_context = [&s](const std::string& a, const std::string& b) {
    for (const auto& c : s.contexts()) {
      bool has_a = false;
      bool has_b = false;
      for (const auto& p : c.members) {
        has_a = has_a || p.label() == a;
        has_b = has_b || p.label() == b;
      }
      if (has_a && has_b) return true;
    }
    return false;
  };
  std::vector<CommutationEntry> out;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const auto& pa = *members[a];
      const auto& pb = *members[b];
      out.push_back({pa.label(), pb.label(), !share_context(pa.label(), pb.label()),
                     commute(pa.matrix(), pb.matrix())});
    }
  }
  return out;
}

}  // namespace kslogic
