#pragma once

// On-disk formats. Both are JSON documents whose scalar entries are strings
// in the exact-scalar encoding (see scalar.hpp).
//
// Operator set:
//   {
//     "format": "kslogic-set",
//     "version": 1,
//     "dimension": 4,
//     "metadata": {"key": "value", ...},          (optional)
//     "contexts": [
//       {"name": "C_z", "members": [
//         {"label": "P_z++", "matrix": [["1", "0", ...], ...]},
//         {"label": "a", "ray": ["1", "1i", "0", "0"]}
//       ]}
//     ]
//   }
// A member carries exactly one of "ray" (nonzero vector, turned into the
// projector v v^dagger / v^dagger v) or "matrix" (rows of a projector).
// "label" is optional and defaults to "<context>.<position>".
//
// State:
//   {"format": "kslogic-state", "version": 1, "builtin": "z+x+"}
//   {"format": "kslogic-state", "version": 1, "name": "psi", "vector": ["1", "0", "0", "0"]}

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kslogic/model.hpp"

namespace kslogic {

struct SetMember {
  std::string label;
  std::variant<ExactVector, ExactMatrix> data;

  friend bool operator==(const SetMember&, const SetMember&) = default;
};

struct SetContext {
  std::string name;
  std::vector<SetMember> members;

  friend bool operator==(const SetContext&, const SetContext&) = default;
};

struct SetDocument {
  std::size_t dimension = 0;
  std::vector<SetContext> contexts;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const SetDocument&, const SetDocument&) = default;
};

/// Throws ParseError (with line/column for JSON syntax errors, with a
/// document path otherwise).
SetDocument parse_set_document(std::string_view text);
std::string print_set_document(const SetDocument& doc);
/// Builds and validates the projectors. Throws InvalidOperand naming the
/// offending context and member.
OperatorSet to_operator_set(const SetDocument& doc);
/// Matrix-form document for an operator set.
SetDocument to_set_document(const OperatorSet& set, std::map<std::string, std::string> metadata = {});
OperatorSet parse_set(std::string_view text);

/// The bundled document for the twelve-projector set.
SetDocument set_o_document();

struct StateDocument {
  std::optional<StateIndices> builtin;
  std::optional<ExactVector> vector;
  std::string name;

  friend bool operator==(const StateDocument&, const StateDocument&) = default;
};

StateDocument parse_state_document(std::string_view text);
std::string print_state_document(const StateDocument& doc);
/// Throws InvalidOperand for a null explicit vector.
PreparedState to_state(const StateDocument& doc);

}  // namespace kslogic
