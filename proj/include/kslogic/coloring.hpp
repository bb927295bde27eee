#pragma once

// Noncontextual {0,1} colorings of an operator set: each distinct projector
// is one variable whatever context it appears in, every context has exactly
// one true member, and no two orthogonal projectors are both true.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kslogic/model.hpp"

namespace kslogic {

struct ColoringVariable {
  std::string label;       // label of the first occurrence
  std::vector<std::string> aliases;  // other labels with an identical matrix
  ExactMatrix matrix;
};

class ColoringProblem {
 public:
  const std::vector<ColoringVariable>& variables() const noexcept { return variables_; }
  /// Variable indices per context, in listed member order.
  const std::vector<std::vector<std::size_t>>& contexts() const noexcept { return contexts_; }
  const std::vector<std::string>& context_names() const noexcept { return context_names_; }
  /// Pairs (a, b), a < b, with P_a P_b = 0.
  const std::vector<std::pair<std::size_t, std::size_t>>& orthogonality_edges() const noexcept { return edges_; }
  /// Variable index for a label or alias.
  std::optional<std::size_t> variable_of(const std::string& label) const;
  /// Number of variables appearing in more than one context.
  std::size_t shared_variables() const;

 private:
  friend ColoringProblem build_problem(const OperatorSet& set);

  std::vector<ColoringVariable> variables_;
  std::vector<std::vector<std::size_t>> contexts_;
  std::vector<std::string> context_names_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::map<std::string, std::size_t> by_label_;
};

/// Identifies equal matrices and collects orthogonal pairs. Throws
/// InvalidOperand naming the first context that fails validate_context.
ColoringProblem build_problem(const OperatorSet& set);

enum class SolveMode { Decide, Enumerate, EnumerateUpTo };

struct SolveOptions {
  SolveMode mode = SolveMode::Decide;
  std::size_t limit = 0;  // for EnumerateUpTo
};

enum class ColoringStatus { Colorable, Uncolorable };

const char* to_string(ColoringStatus s);

/// Witness maps variable label to 0/1.
using Coloring = std::map<std::string, int>;

struct ColoringResult {
  ColoringStatus status = ColoringStatus::Uncolorable;
  std::optional<Coloring> witness;  // first solution found
  std::optional<std::size_t> count;  // enumerate modes only
  bool exhausted = false;           // the whole search tree was visited
  std::size_t nodes_explored = 0;   // value assignments tried
};

/// Chronological backtracking over variables in order of first appearance,
/// trying 1 before 0. Deterministic.
ColoringResult solve(const ColoringProblem& p, SolveOptions options = {});

/// Per-context sums equal 1 and no orthogonal pair is doubly true.
/// Throws InvalidOperand naming a variable the witness leaves unassigned
/// or assigns something other than 0/1.
bool verify_coloring(const ColoringProblem& p, const Coloring& witness);

}  // namespace kslogic
