#include "kslogic/document.hpp"

#include <algorithm>
#include <initializer_list>

#include "kslogic/error.hpp"
#include "kslogic/json_text.hpp"

namespace kslogic {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

constexpr const char* kSetFormat = "kslogic-set";
constexpr const char* kStateFormat = "kslogic-state";
constexpr int kVersion = 1;

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < offset; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
}

void expect_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&key](const char* a) { return key == a; })) {
      fail(path, "unexpected key '" + key + "'");
    }
  }
}

const Json& field(const Json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing key '") + key + "'");
  return *it;
}

std::string string_field(const Json& obj, const std::string& path, const char* key) {
  const Json& v = field(obj, path, key);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

void check_header(const Json& doc, const char* format) {
  if (string_field(doc, "$", "format") != format) fail("$.format", std::string("expected \"") + format + "\"");
  const Json& version = field(doc, "$", "version");
  if (!version.is_number_integer() || version.get<long>() != kVersion) fail("$.version", "unsupported version");
}

GaussianRational scalar_at(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "scalars are written as strings");
  try {
    return GaussianRational::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

ExactVector vector_at(const Json& v, const std::string& path, std::size_t dim) {
  if (!v.is_array()) fail(path, "expected an array of scalars");
  if (v.size() != dim) fail(path, "expected " + std::to_string(dim) + " entries, got " + std::to_string(v.size()));
  ExactVector out(dim);
  for (std::size_t k = 0; k < dim; ++k) out[k] = scalar_at(v[k], path + "[" + std::to_string(k) + "]");
  return out;
}

ExactMatrix matrix_at(const Json& v, const std::string& path, std::size_t dim) {
  if (!v.is_array() || v.size() != dim) fail(path, "expected " + std::to_string(dim) + " rows");
  ExactMatrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const ExactVector row = vector_at(v[r], path + "[" + std::to_string(r) + "]", dim);
    for (std::size_t c = 0; c < dim; ++c) out(r, c) = row[c];
  }
  return out;
}

OrderedJson scalars(std::span<const GaussianRational> entries) {
  OrderedJson out = OrderedJson::array();
  for (const auto& e : entries) out.push_back(e.str());
  return out;
}

}  // namespace

SetDocument parse_set_document(std::string_view text) {
  const Json doc = parse_json(text);
  expect_keys(doc, "$", {"format", "version", "dimension", "metadata", "contexts"});
  check_header(doc, kSetFormat);

  SetDocument out;
  const Json& dim = field(doc, "$", "dimension");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) fail("$.dimension", "expected a positive integer");
  out.dimension = dim.get<std::size_t>();

  if (const auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) fail("$.metadata", "expected an object of strings");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_string()) fail("$.metadata." + key, "expected a string");
      out.metadata.emplace(key, value.get<std::string>());
    }
  }

  const Json& contexts = field(doc, "$", "contexts");
  if (!contexts.is_array()) fail("$.contexts", "expected an array");
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    const std::string cpath = "$.contexts[" + std::to_string(c) + "]";
    const Json& ctx = contexts[c];
    expect_keys(ctx, cpath, {"name", "members"});
    SetContext sc;
    sc.name = string_field(ctx, cpath, "name");
    const Json& members = field(ctx, cpath, "members");
    if (!members.is_array() || members.empty()) fail(cpath + ".members", "expected a nonempty array");
    for (std::size_t m = 0; m < members.size(); ++m) {
      const std::string mpath = cpath + ".members[" + std::to_string(m) + "]";
      const Json& mem = members[m];
      expect_keys(mem, mpath, {"label", "ray", "matrix"});
      SetMember sm;
      sm.label = mem.contains("label") ? string_field(mem, mpath, "label") : sc.name + "." + std::to_string(m + 1);
      const bool has_ray = mem.contains("ray");
      const bool has_matrix = mem.contains("matrix");
      if (has_ray == has_matrix) fail(mpath, "expected exactly one of 'ray' or 'matrix'");
      if (has_ray) {
        sm.data = vector_at(mem["ray"], mpath + ".ray", out.dimension);
      } else {
        sm.data = matrix_at(mem["matrix"], mpath + ".matrix", out.dimension);
      }
      sc.members.push_back(std::move(sm));
    }
    out.contexts.push_back(std::move(sc));
  }
  return out;
}

std::string print_set_document(const SetDocument& doc) {
  OrderedJson out;
  out["format"] = kSetFormat;
  out["version"] = kVersion;
  out["dimension"] = doc.dimension;
  OrderedJson meta = OrderedJson::object();
  for (const auto& [key, value] : doc.metadata) meta[key] = value;
  out["metadata"] = std::move(meta);
  OrderedJson contexts = OrderedJson::array();
  for (const auto& sc : doc.contexts) {
    OrderedJson ctx;
    ctx["name"] = sc.name;
    OrderedJson members = OrderedJson::array();
    for (const auto& sm : sc.members) {
      OrderedJson mem;
      mem["label"] = sm.label;
      if (const auto* ray = std::get_if<ExactVector>(&sm.data)) {
        mem["ray"] = scalars(ray->entries());
      } else {
        const auto& m = std::get<ExactMatrix>(sm.data);
        OrderedJson rows = OrderedJson::array();
        for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(scalars(m.row(r).entries()));
        mem["matrix"] = std::move(rows);
      }
      members.push_back(std::move(mem));
    }
    ctx["members"] = std::move(members);
    contexts.push_back(std::move(ctx));
  }
  out["contexts"] = std::move(contexts);
  return to_text(out);
}

OperatorSet to_operator_set(const SetDocument& doc) {
  std::vector<Context> contexts;
  for (const auto& sc : doc.contexts) {
    Context ctx{sc.name, {}};
    for (const auto& sm : sc.members) {
      const std::string where = "context '" + sc.name + "', member '" + sm.label + "'";
      ExactMatrix matrix = ExactMatrix::zero(doc.dimension);
      if (const auto* ray = std::get_if<ExactVector>(&sm.data)) {
        if (ray->is_zero()) throw InvalidOperand(where + ": ray is the null vector");
        matrix = ray_projector(*ray);
      } else {
        matrix = std::get<ExactMatrix>(sm.data);
        if (!is_projector(matrix)) throw InvalidOperand(where + ": matrix is not an orthogonal projector");
      }
      ctx.members.emplace_back(std::move(matrix), sm.label);
    }
    contexts.push_back(std::move(ctx));
  }
  return OperatorSet(doc.dimension, std::move(contexts));
}

SetDocument to_set_document(const OperatorSet& set, std::map<std::string, std::string> metadata) {
  SetDocument doc;
  doc.dimension = set.ambient_dim();
  doc.metadata = std::move(metadata);
  for (const auto& ctx : set.contexts()) {
    SetContext sc{ctx.name, {}};
    for (const auto& p : ctx.members) sc.members.push_back({p.label(), p.matrix()});
    doc.contexts.push_back(std::move(sc));
  }
  return doc;
}

OperatorSet parse_set(std::string_view text) { return to_operator_set(parse_set_document(text)); }

SetDocument set_o_document() {
  return to_set_document(build_set_o(), {{"description", "Two spin-1/2 particles: twelve product projectors "
                                                         "P_jab = |ja><ja| (x) |jb><jb| in contexts C_z, C_x, C_y"},
                                         {"generator", "kslogic export-set"}});
}

StateDocument parse_state_document(std::string_view text) {
  const Json doc = parse_json(text);
  expect_keys(doc, "$", {"format", "version", "builtin", "name", "vector"});
  check_header(doc, kStateFormat);
  StateDocument out;
  const bool has_builtin = doc.contains("builtin");
  const bool has_vector = doc.contains("vector");
  if (has_builtin == has_vector) fail("$", "expected exactly one of 'builtin' or 'vector'");
  if (has_builtin) {
    if (doc.contains("name")) fail("$.name", "builtin states are named by their code");
    const std::string code = string_field(doc, "$", "builtin");
    out.builtin = parse_state_code(code);
    if (!out.builtin) fail("$.builtin", "expected a code like \"z+x-\", got \"" + code + "\"");
    out.name = code;
  } else {
    const Json& v = doc["vector"];
    if (!v.is_array() || v.empty()) fail("$.vector", "expected a nonempty array of scalars");
    out.vector = vector_at(v, "$.vector", v.size());
    out.name = doc.contains("name") ? string_field(doc, "$", "name") : "explicit";
  }
  return out;
}

std::string print_state_document(const StateDocument& doc) {
  OrderedJson out;
  out["format"] = kStateFormat;
  out["version"] = kVersion;
  if (doc.builtin) {
    out["builtin"] = state_code(*doc.builtin);
  } else if (doc.vector) {
    out["name"] = doc.name;
    out["vector"] = scalars(doc.vector->entries());
  }
  return to_text(out);
}

PreparedState to_state(const StateDocument& doc) {
  if (doc.builtin) return build_state(*doc.builtin);
  if (!doc.vector) throw InvalidOperand("state document without a state");
  return PreparedState(*doc.vector, doc.name);
}

}  // namespace kslogic
