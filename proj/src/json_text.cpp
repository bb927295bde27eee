#include "kslogic/json_text.hpp"

#include <algorithm>

namespace kslogic {

namespace {

bool is_flat_array(const nlohmann::ordered_json& v) {
  return v.is_array() && std::none_of(v.begin(), v.end(), [](const auto& e) { return e.is_structured(); });
}

void write(const nlohmann::ordered_json& v, std::size_t depth, std::string& out) {
  const std::string pad(2 * depth, ' ');
  const std::string inner(2 * (depth + 1), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : v.items()) {
      if (!first) out += ",\n";
      first = false;
      out += inner;
      out += nlohmann::ordered_json(key).dump();
      out += ": ";
      write(value, depth + 1, out);
    }
    out += "\n" + pad + "}";
  } else if (v.is_array()) {
    if (v.empty()) {
      out += "[]";
    } else if (is_flat_array(v)) {
      out += "[";
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k > 0) out += ", ";
        out += v[k].dump();
      }
      out += "]";
    } else {
      out += "[\n";
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k > 0) out += ",\n";
        out += inner;
        write(v[k], depth + 1, out);
      }
      out += "\n" + pad + "]";
    }
  } else {
    out += v.dump();
  }
}

}  // namespace

std::string to_text(const nlohmann::ordered_json& value) {
  std::string out;
  write(value, 0, out);
  out += '\n';
  return out;
}

}  // namespace kslogic
