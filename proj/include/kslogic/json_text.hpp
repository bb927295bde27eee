#pragma once

#include <string>

#include <json.hpp>

namespace kslogic {

/// Deterministic pretty printer: two-space indent, insertion key order,
/// arrays of scalars kept on one line (so matrices print row by row).
/// The result ends with a newline.
std::string to_text(const nlohmann::ordered_json& value);

}  // namespace kslogic
