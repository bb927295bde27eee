#include "kslogic/coloring.hpp"

#include <functional>

#include "kslogic/error.hpp"

namespace kslogic {

std::optional<std::size_t> ColoringProblem::variable_of(const std::string& label) const {
  const auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::size_t ColoringProblem::shared_variables() const {
  std::vector<std::size_t> uses(variables_.size(), 0);
  for (const auto& ctx : contexts_) {
    for (auto v : ctx) ++uses[v];
  }
  std::size_t shared = 0;
  for (auto u : uses) shared += u > 1 ? 1 : 0;
  return shared;
}

ColoringProblem build_problem(const OperatorSet& set) {
  ColoringProblem p;
  for (const auto& ctx : set.contexts()) {
    const auto report = validate_context(ctx);
    if (!report.valid()) throw InvalidOperand("context '" + ctx.name + "' is not a resolution of the identity");

    std::vector<std::size_t> indices;
    for (const auto& member : ctx.members) {
      std::optional<std::size_t> found;
      if (const auto it = p.by_label_.find(member.label()); it != p.by_label_.end()) found = it->second;
      for (std::size_t v = 0; !found && v < p.variables_.size(); ++v) {
        if (p.variables_[v].matrix == member.matrix()) {
          found = v;
          p.variables_[v].aliases.push_back(member.label());
        }
      }
      if (!found) {
        found = p.variables_.size();
        p.variables_.push_back({member.label(), {}, member.matrix()});
      }
      p.by_label_.emplace(member.label(), *found);
      indices.push_back(*found);
    }
    p.contexts_.push_back(std::move(indices));
    p.context_names_.push_back(ctx.name);
  }

  for (std::size_t a = 0; a < p.variables_.size(); ++a) {
    for (std::size_t b = a + 1; b < p.variables_.size(); ++b) {
      if (matmul(p.variables_[a].matrix, p.variables_[b].matrix).is_zero()) p.edges_.emplace_back(a, b);
    }
  }
  return p;
}

const char* to_string(ColoringStatus s) { return s == ColoringStatus::Colorable ? "colorable" : "uncolorable"; }

namespace {

class Search {
 public:
  Search(const ColoringProblem& p, SolveOptions options) : p_(p), options_(options) {
    const std::size_t n = p.variables().size();
    value_.assign(n, -1);
    contexts_of_.resize(n);
    neighbours_.resize(n);
    for (std::size_t c = 0; c < p.contexts().size(); ++c) {
      for (auto v : p.contexts()[c]) contexts_of_[v].push_back(c);
    }
    for (const auto& [a, b] : p.orthogonality_edges()) {
      neighbours_[a].push_back(b);
      neighbours_[b].push_back(a);
    }
  }

  ColoringResult run() {
    const bool finished = descend(0);
    result_.exhausted = finished;
    result_.status = result_.witness ? ColoringStatus::Colorable : ColoringStatus::Uncolorable;
    if (options_.mode != SolveMode::Decide) result_.count = solutions_;
    return result_;
  }

 private:
  bool consistent_after(std::size_t v) const {
    if (value_[v] == 1) {
      for (auto u : neighbours_[v]) {
        if (value_[u] == 1) return false;
      }
    }
    for (auto c : contexts_of_[v]) {
      int trues = 0;
      int open = 0;
      for (auto u : p_.contexts()[c]) {
        if (value_[u] == 1) ++trues;
        if (value_[u] == -1) ++open;
      }
      if (trues > 1 || (trues == 0 && open == 0)) return false;
    }
    return true;
  }

  bool done() const {
    switch (options_.mode) {
      case SolveMode::Decide: return solutions_ >= 1;
      case SolveMode::Enumerate: return false;
      case SolveMode::EnumerateUpTo: return solutions_ >= options_.limit;
    }
    return false;
  }

  // Returns false when the search stopped early.
  bool descend(std::size_t v) {
    if (done()) return false;
    if (v == value_.size()) {
      ++solutions_;
      if (!result_.witness) {
        Coloring w;
        for (std::size_t k = 0; k < value_.size(); ++k) w[p_.variables()[k].label] = value_[k];
        result_.witness = std::move(w);
      }
      return true;
    }
    for (int candidate : {1, 0}) {
      if (done()) return false;
      value_[v] = candidate;
      ++result_.nodes_explored;
      if (consistent_after(v) && !descend(v + 1)) {
        value_[v] = -1;
        return false;
      }
    }
    value_[v] = -1;
    return true;
  }

  const ColoringProblem& p_;
  SolveOptions options_;
  std::vector<int> value_;
  std::vector<std::vector<std::size_t>> contexts_of_;
  std::vector<std::vector<std::size_t>> neighbours_;
  std::size_t solutions_ = 0;
  ColoringResult result_;
};

}  // namespace

ColoringResult solve(const ColoringProblem& p, SolveOptions options) {
  if (options.mode == SolveMode::EnumerateUpTo && options.limit == 0) {
    throw InvalidOperand("enumeration limit must be positive");
  }
  return Search(p, options).run();
}

bool verify_coloring(const ColoringProblem& p, const Coloring& witness) {
  std::vector<int> value(p.variables().size());
  for (std::size_t v = 0; v < p.variables().size(); ++v) {
    const auto& label = p.variables()[v].label;
    const auto it = witness.find(label);
    if (it == witness.end()) throw InvalidOperand("witness leaves '" + label + "' unassigned");
    if (it->second != 0 && it->second != 1) throw InvalidOperand("witness assigns a non-bivalent value to '" + label + "'");
    value[v] = it->second;
  }
  for (const auto& ctx : p.contexts()) {
    int total = 0;
    for (auto v : ctx) total += value[v];
    if (total != 1) return false;
  }
  for (const auto& [a, b] : p.orthogonality_edges()) {
    if (value[a] == 1 && value[b] == 1) return false;
  }
  return true;
}

}  // namespace kslogic
