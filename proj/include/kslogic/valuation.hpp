#pragma once

// Truth valuations of projector propositions induced by a state.
//
// Three readings are kept apart:
//   * bivalent: 1 when the state lies in ran(P), 0 when it lies in ker(P),
//     and no value at all (a gap) otherwise;
//   * many-valued: the Born value <psi|P|psi>/<psi|psi> in [0,1];
//   * supervaluation: a formula over one context is supertrue/superfalse
//     when it is true/false under every admissible completion of the gaps.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kslogic/lattice.hpp"
#include "kslogic/model.hpp"

namespace kslogic {

enum class TruthValue { False = 0, True = 1 };

inline int to_int(TruthValue v) { return v == TruthValue::True ? 1 : 0; }

struct Membership {
  bool in_range = false;
  bool in_kernel = false;
};

/// Partial {0,1} map keyed by projector label. Gaps are absent keys.
class PartialBivalentValuation {
 public:
  PartialBivalentValuation(PreparedState state, std::map<std::string, TruthValue> assignments,
                           std::map<std::string, Membership> evidence);

  const PreparedState& state() const noexcept { return state_; }
  const std::map<std::string, TruthValue>& assignments() const noexcept { return assignments_; }
  /// Range/kernel membership found for every labelled operator examined.
  const std::map<std::string, Membership>& evidence() const noexcept { return evidence_; }
  std::optional<TruthValue> value(const std::string& label) const;

 private:
  PreparedState state_;
  std::map<std::string, TruthValue> assignments_;
  std::map<std::string, Membership> evidence_;
};

/// Decides ran/ker membership of the state for every operator of the set.
/// Throws DimensionMismatch when the state and the set disagree.
PartialBivalentValuation state_induced(const PreparedState& state, const OperatorSet& set);

/// Single-operator form: 1, 0 or gap (nullopt).
std::optional<TruthValue> state_induced_value(const ExactVector& state, const ExactMatrix& projector);

struct TotalityReport {
  bool total = true;
  std::vector<std::string> gaps;  // labels in order of first appearance
};

TotalityReport is_total(const PartialBivalentValuation& v, const OperatorSet& set);

class ManyValuedValuation {
 public:
  /// Throws InvalidOperand if a value lies outside [0,1].
  ManyValuedValuation(PreparedState state, std::map<std::string, Rational> values);

  const PreparedState& state() const noexcept { return state_; }
  const std::map<std::string, Rational>& values() const noexcept { return values_; }
  /// Throws InvalidOperand for an unknown label.
  const Rational& value(const std::string& label) const;

 private:
  PreparedState state_;
  std::map<std::string, Rational> values_;
};

/// Born value <psi|P|psi> / <psi|psi> of a single projector.
Rational born_value(const PreparedState& state, const ExactMatrix& projector);
ManyValuedValuation born(const PreparedState& state, const OperatorSet& set);

enum class EntailmentVerdict { Holds, FailsByGap, FailsByExcess, FailsByDeficit };

const char* to_string(EntailmentVerdict v);

/// Does v(sum P) = 1 entail sum v(P) = 1 on this context?
///
/// lhs is v(sum P) = v(1) = 1 for a valid context. For bivalent valuations
/// rhs sums the assigned values; any gap makes the entailment fail unless
/// rhs already exceeds 1. For many-valued valuations rhs is the exact sum of
/// the values and the verdict reads the values bivalently: more than one
/// nonzero value is an excess of truths.
struct EntailmentReport {
  std::string context;
  Rational lhs;
  Rational rhs;
  std::size_t gaps = 0;
  std::size_t nonzero = 0;
  EntailmentVerdict verdict = EntailmentVerdict::Holds;
};

/// Throws InvalidOperand if the context does not pass validate_context.
EntailmentReport entailment_check(const PartialBivalentValuation& v, const Context& c);
EntailmentReport entailment_check(const ManyValuedValuation& v, const Context& c);

struct ConjunctionValue {
  std::string first;
  std::string second;
  int product = 0;
  int minimum = 0;
  std::optional<int> operator_value;  // state-induced value of meet(first, second)
  bool agree = false;
};

struct DisjunctionValue {
  int sum = 0;
  int maximum = 0;
  std::optional<int> operator_value;  // state-induced value of the join of all members
  bool agree = false;
};

/// Connectives over one context. Abstains (abstained = true, gaps listed)
/// unless the valuation is total on the context.
struct ConnectivesReport {
  std::string context;
  bool abstained = false;
  std::vector<std::string> gaps;
  std::vector<ConjunctionValue> conjunctions;
  std::optional<DisjunctionValue> disjunction;
  bool consistent() const;
};

/// Throws InvalidOperand if the context does not pass validate_context.
ConnectivesReport connectives(const PartialBivalentValuation& v, const Context& c);

/// Lukasiewicz connectives on [0,1]:
///   and(a,b) = max(0, a+b-1), or(a,b) = min(1, a+b), not(a) = 1-a.
/// Operands outside [0,1] raise InvalidOperand.
enum class LukasiewiczOp { And, Or, Not };

Rational lukasiewicz(const Rational& a, const Rational& b, LukasiewiczOp op);
Rational lukasiewicz_and(const Rational& a, const Rational& b);
Rational lukasiewicz_or(const Rational& a, const Rational& b);
Rational lukasiewicz_not(const Rational& a);

struct Formula {
  enum class Kind { Atom, Conjunction, Disjunction };
  Kind kind;
  std::vector<std::string> labels;

  static Formula atom(std::string label) { return {Kind::Atom, {std::move(label)}}; }
  static Formula conjunction(std::vector<std::string> labels) { return {Kind::Conjunction, std::move(labels)}; }
  static Formula disjunction(std::vector<std::string> labels) { return {Kind::Disjunction, std::move(labels)}; }
  /// Disjunction of every member of the context.
  static Formula disjunction_of(const Context& c);

  std::string str() const;
};

enum class SuperVerdict { Supertrue, Superfalse, Gap, Inconsistent };

const char* to_string(SuperVerdict v);

struct SupervaluationVerdict {
  Formula target;
  SuperVerdict verdict = SuperVerdict::Gap;
  std::size_t completions_examined = 0;
  std::size_t true_in = 0;
};

/// An admissible completion assigns every member of the context, keeps the
/// values v already has, and makes exactly one member true. Throws
/// InvalidOperand if the target mentions a label outside the context.
SupervaluationVerdict supervaluate(const PartialBivalentValuation& v, const Context& c, const Formula& target);

/// The admissible completions themselves, in member order of the true one.
std::vector<std::map<std::string, TruthValue>> admissible_completions(const PartialBivalentValuation& v,
                                                                      const Context& c);

}  // namespace kslogic
