#include "kslogic/valuation.hpp"

#include <algorithm>

#include "kslogic/error.hpp"

namespace kslogic {

namespace {

void require_valid(const Context& c) {
  const auto report = validate_context(c);
  if (!report.valid()) throw InvalidOperand("context '" + c.name + "' is not a resolution of the identity");
}

void require_unit_interval(const Rational& a) {
  if (a < Rational(0) || Rational(1) < a) {
    throw InvalidOperand("truth value " + a.str() + " lies outside [0,1]");
  }
}

bool mentions_only(const Formula& f, const Context& c) {
  return std::all_of(f.labels.begin(), f.labels.end(), [&c](const std::string& l) {
    return std::any_of(c.members.begin(), c.members.end(), [&l](const Projector& p) { return p.label() == l; });
  });
}

bool evaluate(const Formula& f, const std::map<std::string, TruthValue>& total) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      return total.at(f.labels.front()) == TruthValue::True;
    case Formula::Kind::Conjunction:
      return std::all_of(f.labels.begin(), f.labels.end(),
                         [&total](const std::string& l) { return total.at(l) == TruthValue::True; });
    case Formula::Kind::Disjunction:
      return std::any_of(f.labels.begin(), f.labels.end(),
                         [&total](const std::string& l) { return total.at(l) == TruthValue::True; });
  }
  return false;
}

}  // namespace

PartialBivalentValuation::PartialBivalentValuation(PreparedState state, std::map<std::string, TruthValue> assignments,
                                                   std::map<std::string, Membership> evidence)
    : state_(std::move(state)), assignments_(std::move(assignments)), evidence_(std::move(evidence)) {}

std::optional<TruthValue> PartialBivalentValuation::value(const std::string& label) const {
  const auto it = assignments_.find(label);
  if (it == assignments_.end()) return std::nullopt;
  return it->second;
}

std::optional<TruthValue> state_induced_value(const ExactVector& state, const ExactMatrix& projector) {
  if (member(state, range_basis(projector))) return TruthValue::True;
  if (member(state, kernel_basis(projector))) return TruthValue::False;
  return std::nullopt;
}

PartialBivalentValuation state_induced(const PreparedState& state, const OperatorSet& set) {
  if (state.vector().dim() != set.ambient_dim()) {
    throw DimensionMismatch("state '" + state.name() + "' has dimension " + std::to_string(state.vector().dim()) +
                            ", operator set has " + std::to_string(set.ambient_dim()));
  }
  std::map<std::string, TruthValue> assignments;
  std::map<std::string, Membership> evidence;
  for (const Projector* p : set.distinct_members()) {
    Membership m;
    m.in_range = member(state.vector(), range_basis(p->matrix()));
    m.in_kernel = member(state.vector(), kernel_basis(p->matrix()));
    if (m.in_range) {
      assignments.emplace(p->label(), TruthValue::True);
    } else if (m.in_kernel) {
      assignments.emplace(p->label(), TruthValue::False);
    }
    evidence.emplace(p->label(), m);
  }
  return PartialBivalentValuation(state, std::move(assignments), std::move(evidence));
}

TotalityReport is_total(const PartialBivalentValuation& v, const OperatorSet& set) {
  TotalityReport report;
  for (const Projector* p : set.distinct_members()) {
    if (!v.value(p->label())) report.gaps.push_back(p->label());
  }
  report.total = report.gaps.empty();
  return report;
}

ManyValuedValuation::ManyValuedValuation(PreparedState state, std::map<std::string, Rational> values)
    : state_(std::move(state)), values_(std::move(values)) {
  for (const auto& [label, value] : values_) require_unit_interval(value);
}

const Rational& ManyValuedValuation::value(const std::string& label) const {
  const auto it = values_.find(label);
  if (it == values_.end()) throw InvalidOperand("no value for '" + label + "'");
  return it->second;
}

Rational born_value(const PreparedState& state, const ExactMatrix& projector) {
  const GaussianRational q = inner(state.vector(), apply(projector, state.vector()));
  if (!q.is_real()) throw InvalidOperand("operator is not Hermitian: <psi|P|psi> = " + q.str());
  return q.re() / state.norm_sq();
}

ManyValuedValuation born(const PreparedState& state, const OperatorSet& set) {
  if (state.vector().dim() != set.ambient_dim()) {
    throw DimensionMismatch("state '" + state.name() + "' does not match the operator set dimension");
  }
  std::map<std::string, Rational> values;
  for (const Projector* p : set.distinct_members()) values.emplace(p->label(), born_value(state, p->matrix()));
  return ManyValuedValuation(state, std::move(values));
}

const char* to_string(EntailmentVerdict v) {
  switch (v) {
    case EntailmentVerdict::Holds: return "holds";
    case EntailmentVerdict::FailsByGap: return "fails-by-gap";
    case EntailmentVerdict::FailsByExcess: return "fails-by-excess";
    case EntailmentVerdict::FailsByDeficit: return "fails-by-deficit";
  }
  return "?";
}

EntailmentReport entailment_check(const PartialBivalentValuation& v, const Context& c) {
  require_valid(c);
  EntailmentReport report;
  report.context = c.name;
  // sum P = 1, and the identity is true in every state.
  report.lhs = Rational(1);
  for (const auto& p : c.members) {
    const auto value = v.value(p.label());
    if (!value) {
      ++report.gaps;
      continue;
    }
    report.rhs += Rational(to_int(*value));
    if (*value == TruthValue::True) ++report.nonzero;
  }
  if (report.lhs < report.rhs) {
    report.verdict = EntailmentVerdict::FailsByExcess;
  } else if (report.gaps > 0) {
    report.verdict = EntailmentVerdict::FailsByGap;
  } else if (report.rhs == report.lhs) {
    report.verdict = EntailmentVerdict::Holds;
  } else {
    report.verdict = EntailmentVerdict::FailsByDeficit;
  }
  return report;
}

EntailmentReport entailment_check(const ManyValuedValuation& v, const Context& c) {
  require_valid(c);
  EntailmentReport report;
  report.context = c.name;
  report.lhs = Rational(1);
  for (const auto& p : c.members) {
    const Rational& value = v.value(p.label());
    report.rhs += value;
    if (!value.is_zero()) ++report.nonzero;
  }
  if (report.nonzero > 1) {
    report.verdict = EntailmentVerdict::FailsByExcess;
  } else if (report.nonzero == 1 && report.rhs == report.lhs) {
    report.verdict = EntailmentVerdict::Holds;
  } else {
    report.verdict = EntailmentVerdict::FailsByDeficit;
  }
  return report;
}

bool ConnectivesReport::consistent() const {
  if (abstained) return true;
  for (const auto& c : conjunctions) {
    if (!c.agree) return false;
  }
  return !disjunction || disjunction->agree;
}

ConnectivesReport connectives(const PartialBivalentValuation& v, const Context& c) {
  require_valid(c);
  ConnectivesReport report;
  report.context = c.name;
  std::vector<int> values;
  for (const auto& p : c.members) {
    const auto value = v.value(p.label());
    if (!value) {
      report.gaps.push_back(p.label());
      continue;
    }
    values.push_back(to_int(*value));
  }
  if (!report.gaps.empty()) {
    report.abstained = true;
    return report;
  }

  const ExactVector& psi = v.state().vector();
  auto operator_value = [&psi](const LatticeElement& e) -> std::optional<int> {
    const auto t = state_induced_value(psi, e.matrix());
    if (!t) return std::nullopt;
    return to_int(*t);
  };

  std::vector<LatticeElement> elems;
  elems.reserve(c.members.size());
  for (const auto& p : c.members) elems.emplace_back(p);

  for (std::size_t a = 0; a < c.members.size(); ++a) {
    for (std::size_t b = a + 1; b < c.members.size(); ++b) {
      ConjunctionValue conj;
      conj.first = c.members[a].label();
      conj.second = c.members[b].label();
      conj.product = values[a] * values[b];
      conj.minimum = std::min(values[a], values[b]);
      conj.operator_value = operator_value(meet(elems[a], elems[b]));
      conj.agree = conj.product == conj.minimum && conj.operator_value == conj.product;
      report.conjunctions.push_back(std::move(conj));
    }
  }

  DisjunctionValue disj;
  for (int x : values) disj.sum += x;
  disj.maximum = *std::max_element(values.begin(), values.end());
  disj.operator_value = operator_value(join(elems));
  disj.agree = disj.sum == disj.maximum && disj.operator_value == disj.sum;
  report.disjunction = disj;
  return report;
}

Rational lukasiewicz_and(const Rational& a, const Rational& b) {
  require_unit_interval(a);
  require_unit_interval(b);
  return max(Rational(0), a + b - Rational(1));
}

Rational lukasiewicz_or(const Rational& a, const Rational& b) {
  require_unit_interval(a);
  require_unit_interval(b);
  return min(Rational(1), a + b);
}

Rational lukasiewicz_not(const Rational& a) {
  require_unit_interval(a);
  return Rational(1) - a;
}

Rational lukasiewicz(const Rational& a, const Rational& b, LukasiewiczOp op) {
  switch (op) {
    case LukasiewiczOp::And: return lukasiewicz_and(a, b);
    case LukasiewiczOp::Or: return lukasiewicz_or(a, b);
    case LukasiewiczOp::Not: return lukasiewicz_not(a);
  }
  throw InvalidOperand("unknown connective");
}

Formula Formula::disjunction_of(const Context& c) {
  std::vector<std::string> labels;
  for (const auto& p : c.members) labels.push_back(p.label());
  return disjunction(std::move(labels));
}

std::string Formula::str() const {
  if (kind == Kind::Atom) return labels.front();
  const char* sep = kind == Kind::Conjunction ? " & " : " | ";
  std::string out = "(";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k > 0) out += sep;
    out += labels[k];
  }
  return out + ")";
}

const char* to_string(SuperVerdict v) {
  switch (v) {
    case SuperVerdict::Supertrue: return "supertrue";
    case SuperVerdict::Superfalse: return "superfalse";
    case SuperVerdict::Gap: return "gap";
    case SuperVerdict::Inconsistent: return "inconsistent";
  }
  return "?";
}

std::vector<std::map<std::string, TruthValue>> admissible_completions(const PartialBivalentValuation& v,
                                                                      const Context& c) {
  // Exactly one member is true, so a completion is fixed by which one.
  std::vector<std::map<std::string, TruthValue>> out;
  for (const auto& chosen : c.members) {
    std::map<std::string, TruthValue> completion;
    bool consistent = true;
    for (const auto& p : c.members) {
      const TruthValue t = p.label() == chosen.label() ? TruthValue::True : TruthValue::False;
      const auto known = v.value(p.label());
      if (known && *known != t) consistent = false;
      completion[p.label()] = t;
    }
    if (consistent) out.push_back(std::move(completion));
  }
  return out;
}

SupervaluationVerdict supervaluate(const PartialBivalentValuation& v, const Context& c, const Formula& target) {
  if (target.labels.empty()) throw InvalidOperand("formula without atoms");
  if (!mentions_only(target, c)) {
    throw InvalidOperand("formula " + target.str() + " mentions operators outside context '" + c.name + "'");
  }
  SupervaluationVerdict out{target, SuperVerdict::Gap, 0, 0};
  const auto completions = admissible_completions(v, c);
  out.completions_examined = completions.size();
  for (const auto& completion : completions) {
    if (evaluate(target, completion)) ++out.true_in;
  }
  if (completions.empty()) {
    out.verdict = SuperVerdict::Inconsistent;
  } else if (out.true_in == completions.size()) {
    out.verdict = SuperVerdict::Supertrue;
  } else if (out.true_in == 0) {
    out.verdict = SuperVerdict::Superfalse;
  } else {
    out.verdict = SuperVerdict::Gap;
  }
  return out;
}

}  // namespace kslogic
