#pragma once

// Structured reports for the CLI commands. Each report is one JSON object
// with a fixed key order; the machine rendering is to_text() of it and the
// human rendering is derived from the same object, so both carry the same
// data. Every report ends with "exit_status" (0 affirmative, 1 negative).

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kslogic/coloring.hpp"
#include "kslogic/model.hpp"

namespace kslogic {

using Report = nlohmann::ordered_json;

Report validate_report(const OperatorSet& set, const std::string& set_name);

enum class Semantics { Bivalent, Born, Super };

const char* to_string(Semantics s);

Report valuate_report(const OperatorSet& set, const PreparedState& state, Semantics semantics,
                      const std::string& set_name);

/// Throws InvalidOperand when a context is not a resolution of the identity.
Report color_report(const OperatorSet& set, SolveOptions options, const std::string& set_name);

struct LatticeQuery {
  enum class Op { Meet, Join, Leq, Complement };
  Op op;
  std::vector<std::string> operands;
};

/// "meet A B", "join A B C ...", "leq A B", "complement A". Operands are
/// projector labels, "1" (top), "0" (bottom), or, for join only, a context
/// name standing for all of its members. Throws ParseError on bad syntax.
LatticeQuery parse_lattice_query(std::string_view text);

/// Throws InvalidOperand for an operand that names nothing in the set.
Report lattice_report(const OperatorSet& set, const std::vector<LatticeQuery>& queries, const std::string& set_name);

int exit_status(const Report& r);
std::string render_machine(const Report& r);
std::string render_human(const Report& r);

}  // namespace kslogic
