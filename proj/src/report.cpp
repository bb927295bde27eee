#include "kslogic/report.hpp"

#include <algorithm>
#include <sstream>

#include "kslogic/error.hpp"
#include "kslogic/json_text.hpp"
#include "kslogic/lattice.hpp"
#include "kslogic/valuation.hpp"

namespace kslogic {

namespace {

using Json = nlohmann::ordered_json;

Json scalars(std::span<const GaussianRational> entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back(e.str());
  return out;
}

Json matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(scalars(m.row(r).entries()));
  return rows;
}

Json labels_json(const Context& c) {
  Json out = Json::array();
  for (const auto& p : c.members) out.push_back(p.label());
  return out;
}

std::string context_of(const OperatorSet& set, const std::string& label) {
  for (const auto& c : set.contexts()) {
    for (const auto& p : c.members) {
      if (p.label() == label) return c.name;
    }
  }
  return "";
}

Json entailment_json(const EntailmentReport& e) {
  Json out;
  out["context"] = e.context;
  out["lhs"] = e.lhs.str();
  out["rhs"] = e.rhs.str();
  out["gaps"] = e.gaps;
  out["nonzero"] = e.nonzero;
  out["verdict"] = to_string(e.verdict);
  return out;
}

Json skipped_context(const Context& c) {
  Json out;
  out["context"] = c.name;
  out["verdict"] = "skipped-invalid-context";
  return out;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json("gap"); }

Json connectives_json(const ConnectivesReport& r) {
  Json out;
  out["context"] = r.context;
  out["abstained"] = r.abstained;
  out["gaps"] = r.gaps;
  Json conj = Json::array();
  for (const auto& c : r.conjunctions) {
    Json row;
    row["first"] = c.first;
    row["second"] = c.second;
    row["product"] = c.product;
    row["min"] = c.minimum;
    row["operator"] = optional_int(c.operator_value);
    row["agree"] = c.agree;
    conj.push_back(std::move(row));
  }
  out["conjunctions"] = std::move(conj);
  if (r.disjunction) {
    Json d;
    d["sum"] = r.disjunction->sum;
    d["max"] = r.disjunction->maximum;
    d["operator"] = optional_int(r.disjunction->operator_value);
    d["agree"] = r.disjunction->agree;
    out["disjunction"] = std::move(d);
  } else {
    out["disjunction"] = nullptr;
  }
  return out;
}

Json verdict_json(const SupervaluationVerdict& v) {
  Json out;
  out["formula"] = v.target.str();
  out["verdict"] = to_string(v.verdict);
  out["true_in"] = v.true_in;
  out["completions"] = v.completions_examined;
  return out;
}

Json element_json(const LatticeElement& e) {
  Json out;
  out["label"] = e.label();
  out["rank"] = e.range().dimension();
  out["classification"] = to_string(classify_constant(e));
  out["matrix"] = matrix_json(e.matrix());
  return out;
}

}  // namespace

Report validate_report(const OperatorSet& set, const std::string& set_name) {
  Report r;
  r["command"] = "validate";
  r["set"] = set_name;
  r["dimension"] = set.ambient_dim();

  bool all_valid = true;
  Json contexts = Json::array();
  for (const auto& c : set.contexts()) {
    const auto v = validate_context(c);
    all_valid = all_valid && v.valid();
    Json row;
    row["name"] = c.name;
    row["members"] = labels_json(c);
    row["projectors"] = v.all_projectors;
    row["complete"] = v.complete;
    row["orthogonal"] = v.orthogonal;
    row["non_orthogonal_pairs"] = v.non_orthogonal_pairs;
    row["valid"] = v.valid();
    contexts.push_back(std::move(row));
  }
  r["contexts"] = std::move(contexts);

  std::size_t within = 0;
  std::size_t within_commuting = 0;
  std::size_t cross = 0;
  std::size_t cross_noncommuting = 0;
  std::size_t cross_product_projectors = 0;
  Json commuting_cross = Json::array();
  for (const auto& e : commutation_report(set)) {
    if (!e.cross_context) {
      ++within;
      within_commuting += e.commutes ? 1 : 0;
      continue;
    }
    ++cross;
    if (e.commutes) {
      commuting_cross.push_back(Json::array({e.first, e.second}));
    } else {
      ++cross_noncommuting;
    }
    const auto* a = set.find(e.first);
    const auto* b = set.find(e.second);
    if (is_projector(a->matrix() * b->matrix())) ++cross_product_projectors;
  }
  Json comm;
  comm["within_context_pairs"] = within;
  comm["within_context_commuting"] = within_commuting;
  comm["cross_context_pairs"] = cross;
  comm["cross_context_noncommuting"] = cross_noncommuting;
  comm["cross_context_commuting"] = std::move(commuting_cross);
  comm["cross_context_products_that_are_projectors"] = cross_product_projectors;
  r["commutation"] = std::move(comm);

  r["verdict"] = all_valid ? "valid" : "invalid";
  r["exit_status"] = all_valid ? 0 : 1;
  return r;
}

const char* to_string(Semantics s) {
  switch (s) {
    case Semantics::Bivalent: return "bivalent";
    case Semantics::Born: return "born";
    case Semantics::Super: return "super";
  }
  return "?";
}

Report valuate_report(const OperatorSet& set, const PreparedState& state, Semantics semantics,
                      const std::string& set_name) {
  const auto bivalent = state_induced(state, set);
  const auto many = born(state, set);

  Report r;
  r["command"] = "valuate";
  r["set"] = set_name;
  r["state"] = state.name();
  r["semantics"] = to_string(semantics);
  r["state_vector"] = scalars(state.vector().entries());
  if (state.indices()) {
    r["correlated"] = state.correlated();
  } else {
    r["correlated"] = nullptr;
  }

  Json rows = Json::array();
  for (const Projector* p : set.distinct_members()) {
    const auto value = bivalent.value(p->label());
    const auto& ev = bivalent.evidence().at(p->label());
    Json row;
    row["label"] = p->label();
    row["context"] = context_of(set, p->label());
    row["bivalent"] = value ? std::to_string(to_int(*value)) : "gap";
    row["born"] = many.value(p->label()).str();
    row["in_ran"] = ev.in_range;
    row["in_ker"] = ev.in_kernel;
    rows.push_back(std::move(row));
  }
  r["operators"] = std::move(rows);

  std::vector<const Context*> valid;
  for (const auto& c : set.contexts()) {
    if (validate_context(c).valid()) valid.push_back(&c);
  }
  auto is_valid = [&valid](const Context& c) { return std::find(valid.begin(), valid.end(), &c) != valid.end(); };

  Json entailment = Json::array();
  for (const auto& c : set.contexts()) {
    if (!is_valid(c)) {
      entailment.push_back(skipped_context(c));
    } else if (semantics == Semantics::Born) {
      entailment.push_back(entailment_json(entailment_check(many, c)));
    } else {
      entailment.push_back(entailment_json(entailment_check(bivalent, c)));
    }
  }
  r["entailment"] = std::move(entailment);

  switch (semantics) {
    case Semantics::Bivalent: {
      Json conn = Json::array();
      for (const auto& c : set.contexts()) {
        conn.push_back(is_valid(c) ? connectives_json(connectives(bivalent, c)) : skipped_context(c));
      }
      r["connectives"] = std::move(conn);
      break;
    }
    case Semantics::Born: {
      Json mv = Json::array();
      for (const auto& c : set.contexts()) {
        Rational sum;
        Rational luk_or(0);
        Rational luk_and(1);
        for (const auto& p : c.members) {
          const auto& v = many.value(p.label());
          sum += v;
          luk_or = lukasiewicz_or(luk_or, v);
          luk_and = lukasiewicz_and(luk_and, v);
        }
        Json row;
        row["context"] = c.name;
        row["sum"] = sum.str();
        row["lukasiewicz_or"] = luk_or.str();
        row["lukasiewicz_and"] = luk_and.str();
        mv.push_back(std::move(row));
      }
      r["many_valued"] = std::move(mv);
      break;
    }
    case Semantics::Super: {
      Json sv = Json::array();
      for (const auto& c : set.contexts()) {
        if (!is_valid(c)) {
          sv.push_back(skipped_context(c));
          continue;
        }
        Json row;
        row["context"] = c.name;
        row["completions"] = admissible_completions(bivalent, c).size();
        Json atoms = Json::array();
        for (const auto& p : c.members) atoms.push_back(verdict_json(supervaluate(bivalent, c, Formula::atom(p.label()))));
        row["atoms"] = std::move(atoms);
        row["disjunction"] = verdict_json(supervaluate(bivalent, c, Formula::disjunction_of(c)));
        sv.push_back(std::move(row));
      }
      r["supervaluation"] = std::move(sv);
      break;
    }
  }

  const auto totality = is_total(bivalent, set);
  Json tot;
  tot["total"] = totality.total;
  tot["gap_count"] = totality.gaps.size();
  tot["gaps"] = totality.gaps;
  r["totality"] = std::move(tot);

  // Contexts on which the state-induced valuation is total, and the
  // operators valued 0 only through kernel membership outside them.
  Json bivalent_contexts = Json::array();
  for (const auto& c : set.contexts()) {
    const bool all = std::all_of(c.members.begin(), c.members.end(),
                                 [&bivalent](const Projector& p) { return bivalent.value(p.label()).has_value(); });
    if (all) bivalent_contexts.push_back(c.name);
  }
  Json stray_zeros = Json::array();
  for (const auto& c : set.contexts()) {
    if (std::find(bivalent_contexts.begin(), bivalent_contexts.end(), c.name) != bivalent_contexts.end()) continue;
    for (const auto& p : c.members) {
      if (bivalent.value(p.label()) == TruthValue::False) stray_zeros.push_back(p.label());
    }
  }
  std::size_t trues = 0;
  std::size_t falses = 0;
  for (const auto& [label, value] : bivalent.assignments()) (value == TruthValue::True ? trues : falses)++;
  Json summary;
  summary["valued_1"] = trues;
  summary["valued_0"] = falses;
  summary["bivalent_contexts"] = std::move(bivalent_contexts);
  summary["kernel_members_outside_bivalent_contexts"] = std::move(stray_zeros);
  r["summary"] = std::move(summary);

  r["exit_status"] = 0;
  return r;
}

Report color_report(const OperatorSet& set, SolveOptions options, const std::string& set_name) {
  const auto problem = build_problem(set);
  const auto result = solve(problem, options);

  Report r;
  r["command"] = "color";
  r["set"] = set_name;
  switch (options.mode) {
    case SolveMode::Decide: r["mode"] = "decide"; break;
    case SolveMode::Enumerate: r["mode"] = "enumerate"; break;
    case SolveMode::EnumerateUpTo: r["mode"] = "enumerate"; break;
  }
  if (options.mode == SolveMode::EnumerateUpTo) {
    r["limit"] = options.limit;
  } else {
    r["limit"] = nullptr;
  }
  r["contexts"] = problem.contexts().size();
  r["variables"] = problem.variables().size();
  r["shared_variables"] = problem.shared_variables();
  r["orthogonality_edges"] = problem.orthogonality_edges().size();
  r["status"] = to_string(result.status);
  if (result.count) {
    r["count"] = *result.count;
  } else {
    r["count"] = nullptr;
  }
  r["exhausted"] = result.exhausted;
  r["nodes_explored"] = result.nodes_explored;
  if (result.witness) {
    Json w;
    for (const auto& v : problem.variables()) w[v.label] = result.witness->at(v.label);
    r["witness"] = std::move(w);
    r["witness_verified"] = verify_coloring(problem, *result.witness);
  } else {
    r["witness"] = nullptr;
    r["witness_verified"] = nullptr;
  }
  if (problem.shared_variables() == 0) {
    r["note"] =
        "no projector occurs in more than one context, so every choice of one true member per context is "
        "consistent; this set can only fail to be bivalent through state-induced gaps (see valuate)";
  } else {
    r["note"] = nullptr;
  }
  r["exit_status"] = result.status == ColoringStatus::Colorable ? 0 : 1;
  return r;
}

LatticeQuery parse_lattice_query(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string op;
  in >> op;
  std::vector<std::string> operands;
  for (std::string tok; in >> tok;) operands.push_back(tok);

  LatticeQuery q{};
  std::size_t want_min = 0;
  std::size_t want_max = 0;
  if (op == "meet") {
    q.op = LatticeQuery::Op::Meet;
    want_min = want_max = 2;
  } else if (op == "join") {
    q.op = LatticeQuery::Op::Join;
    want_min = 1;
    want_max = static_cast<std::size_t>(-1);
  } else if (op == "leq") {
    q.op = LatticeQuery::Op::Leq;
    want_min = want_max = 2;
  } else if (op == "complement") {
    q.op = LatticeQuery::Op::Complement;
    want_min = want_max = 1;
  } else {
    throw ParseError("unknown lattice operation '" + op + "' (expected meet, join, leq or complement)");
  }
  if (operands.size() < want_min || operands.size() > want_max) {
    throw ParseError("wrong number of operands for '" + op + "'");
  }
  q.operands = std::move(operands);
  return q;
}

Report lattice_report(const OperatorSet& set, const std::vector<LatticeQuery>& queries, const std::string& set_name) {
  const std::size_t n = set.ambient_dim();
  auto element = [&set, n](const std::string& name) {
    if (name == "1") return LatticeElement::top(n);
    if (name == "0") return LatticeElement::bottom(n);
    const Projector* p = set.find(name);
    if (!p) throw InvalidOperand("unknown operator '" + name + "'");
    return LatticeElement(*p);
  };

  Report r;
  r["command"] = "lattice";
  r["set"] = set_name;
  Json ops = Json::array();
  for (const auto& q : queries) {
    Json row;
    switch (q.op) {
      case LatticeQuery::Op::Meet: {
        const auto a = element(q.operands[0]);
        const auto b = element(q.operands[1]);
        const auto m = meet(a, b);
        const bool commuting = commute(a.matrix(), b.matrix());
        row["op"] = "meet";
        row["operands"] = q.operands;
        row["commuting"] = commuting;
        if (commuting) {
          row["matches_product"] = m.matrix() == a.matrix() * b.matrix();
        } else {
          row["matches_product"] = nullptr;
        }
        row["result"] = element_json(m);
        break;
      }
      case LatticeQuery::Op::Join: {
        std::vector<LatticeElement> elems;
        std::vector<std::string> expanded;
        for (const auto& name : q.operands) {
          if (const Context* c = set.find_context(name); c && !set.find(name)) {
            for (const auto& p : c->members) {
              elems.emplace_back(p);
              expanded.push_back(p.label());
            }
          } else {
            elems.push_back(element(name));
            expanded.push_back(name);
          }
        }
        const auto j = join(elems);
        bool orthogonal = true;
        for (std::size_t a = 0; a < elems.size(); ++a) {
          for (std::size_t b = a + 1; b < elems.size(); ++b) {
            orthogonal = orthogonal && (elems[a].matrix() * elems[b].matrix()).is_zero();
          }
        }
        row["op"] = "join";
        row["operands"] = expanded;
        row["pairwise_orthogonal"] = orthogonal;
        if (orthogonal) {
          ExactMatrix total = ExactMatrix::zero(n);
          for (const auto& e : elems) total += e.matrix();
          row["matches_sum"] = total == j.matrix();
        } else {
          row["matches_sum"] = nullptr;
        }
        row["result"] = element_json(j);
        break;
      }
      case LatticeQuery::Op::Leq: {
        row["op"] = "leq";
        row["operands"] = q.operands;
        row["holds"] = leq(element(q.operands[0]), element(q.operands[1]));
        break;
      }
      case LatticeQuery::Op::Complement: {
        row["op"] = "complement";
        row["operands"] = q.operands;
        row["result"] = element_json(orthocomplement(element(q.operands[0])));
        break;
      }
    }
    ops.push_back(std::move(row));
  }
  r["operations"] = std::move(ops);
  r["exit_status"] = 0;
  return r;
}

int exit_status(const Report& r) { return r.at("exit_status").get<int>(); }

std::string render_machine(const Report& r) { return to_text(r); }

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat(const Json& v) {
  return v.is_array() && std::none_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); });
}

bool is_grid(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return is_flat(e) && !e.empty(); });
}

// Array of objects sharing one key sequence, every value a scalar or a flat array.
bool is_table(const Json& v) {
  if (!v.is_array() || v.empty() || !v.front().is_object()) return false;
  std::vector<std::string> keys;
  for (const auto& [k, x] : v.front().items()) keys.push_back(k);
  return std::all_of(v.begin(), v.end(), [&keys](const Json& row) {
    if (!row.is_object() || row.size() != keys.size()) return false;
    std::size_t k = 0;
    for (const auto& [key, x] : row.items()) {
      if (key != keys[k++] || (x.is_structured() && !is_flat(x))) return false;
    }
    return true;
  });
}

std::string cell_text(const Json& v) {
  if (!is_flat(v)) return scalar_text(v);
  if (v.empty()) return "-";
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + scalar_text(v[k]);
  return out;
}

void pad_to(std::string& line, std::size_t width) {
  if (line.size() < width) line.append(width - line.size(), ' ');
}

void render_rows(const std::vector<std::vector<std::string>>& cells, const std::string& indent, std::string& out) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line = indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) pad_to(line, line.size() + width[c] - row[c].size());
    }
    out += line + "\n";
  }
}

void render_value(const std::string& key, const Json& v, const std::string& indent, std::string& out);

void render_object(const Json& obj, const std::string& indent, std::string& out) {
  for (const auto& [key, value] : obj.items()) render_value(key, value, indent, out);
}

void render_value(const std::string& key, const Json& v, const std::string& indent, std::string& out) {
  if (!v.is_structured()) {
    out += indent + key + ": " + scalar_text(v) + "\n";
  } else if (is_flat(v)) {
    out += indent + key + ": " + (v.empty() ? std::string("(none)") : cell_text(v)) + "\n";
  } else if (is_grid(v)) {
    out += indent + key + ":\n";
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : v) {
      std::vector<std::string> line;
      for (const auto& e : row) line.push_back(scalar_text(e));
      cells.push_back(std::move(line));
    }
    render_rows(cells, indent + "  ", out);
  } else if (is_table(v)) {
    out += indent + key + ":\n";
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header;
    for (const auto& [k, x] : v.front().items()) header.push_back(k);
    cells.push_back(std::move(header));
    for (const auto& row : v) {
      std::vector<std::string> line;
      for (const auto& [k, x] : row.items()) line.push_back(cell_text(x));
      cells.push_back(std::move(line));
    }
    render_rows(cells, indent + "  ", out);
  } else if (v.is_object()) {
    out += indent + key + ":\n";
    render_object(v, indent + "  ", out);
  } else {
    out += indent + key + ":\n";
    for (const auto& item : v) {
      if (item.is_object()) {
        std::string block;
        render_object(item, indent + "    ", block);
        if (block.empty()) block = indent + "    {}\n";
        // Turn the first line's indent into a list bullet.
        block.replace(indent.size() + 2, 2, "- ");
        out += block;
      } else {
        render_value("-", item, indent + "  ", out);
      }
    }
  }
}

}  // namespace

std::string render_human(const Report& r) {
  std::string out;
  render_object(r, "", out);
  return out;
}

}  // namespace kslogic
