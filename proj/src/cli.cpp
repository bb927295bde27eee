#include "kslogic/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "kslogic/document.hpp"
#include "kslogic/error.hpp"
#include "kslogic/report.hpp"

namespace kslogic {

namespace {

constexpr int kUsageError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CommonOptions {
  std::string set_file;
  std::string format = "human";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool needs_set) {
  if (needs_set) cmd->add_option("--set", o.set_file, "Operator set document (JSON)")->required();
  cmd->add_option("--format", o.format, "Report rendering")->check(CLI::IsMember({"human", "machine"}));
  cmd->add_option("--output", o.output, "Write the report to FILE instead of stdout");
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw Error("cannot write '" + output + "'");
  file << text;
}

int emit_report(const Report& r, const CommonOptions& o, std::ostream& out) {
  emit(o.format == "machine" ? render_machine(r) : render_human(r), o.output, out);
  return exit_status(r);
}

std::string display_name(const std::string& path) { return std::filesystem::path(path).filename().string(); }

// "a; b" and repeated --ops flags both give separate queries.
std::vector<LatticeQuery> lattice_queries(const std::vector<std::string>& specs) {
  std::vector<LatticeQuery> out;
  for (const auto& spec : specs) {
    std::istringstream in(spec);
    for (std::string part; std::getline(in, part, ';');) {
      if (part.find_first_not_of(" \t") == std::string::npos) continue;
      out.push_back(parse_lattice_query(part));
    }
  }
  if (out.empty()) throw ParseError("no lattice operation given");
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of projector truth valuations and noncontextual colorings", "kslogic"};
  app.require_subcommand(1);

  CommonOptions validate_opts;
  auto* validate = app.add_subcommand("validate", "Check resolution of the identity, orthogonality and commutation");
  add_common(validate, validate_opts, true);

  CommonOptions valuate_opts;
  std::string state_code_text;
  std::string state_file;
  std::string semantics_text = "bivalent";
  auto* valuate = app.add_subcommand("valuate", "State-induced, Born and supervaluation truth values");
  add_common(valuate, valuate_opts, true);
  auto* state_opt = valuate->add_option("--state", state_code_text, "Product state code such as z+x-");
  auto* state_file_opt = valuate->add_option("--state-file", state_file, "State document (JSON)");
  state_opt->excludes(state_file_opt);
  valuate->add_option("--semantics", semantics_text, "bivalent, born or super")
      ->check(CLI::IsMember({"bivalent", "born", "super"}));

  CommonOptions color_opts;
  std::string mode_text = "decide";
  std::size_t limit = 0;
  auto* color = app.add_subcommand("color", "Search for a noncontextual {0,1} coloring");
  add_common(color, color_opts, true);
  color->add_option("--mode", mode_text, "decide or enumerate")->check(CLI::IsMember({"decide", "enumerate"}));
  color->add_option("--limit", limit, "Stop enumerating after N colorings")->check(CLI::PositiveNumber);

  CommonOptions lattice_opts;
  std::vector<std::string> ops;
  auto* lattice = app.add_subcommand("lattice", "Meet, join, order and complement of projector ranges");
  add_common(lattice, lattice_opts, true);
  lattice->add_option("--ops", ops, "e.g. \"meet P_z++ P_z+-\"; separate several with ';'")->required();

  CommonOptions export_opts;
  auto* export_set = app.add_subcommand("export-set", "Print the bundled twelve-projector set document");
  export_set->add_option("--output", export_opts.output, "Write to FILE instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*export_set) {
      emit(print_set_document(set_o_document()), export_opts.output, out);
      return 0;
    }

    auto load_set = [](const CommonOptions& o) { return parse_set(read_file(o.set_file)); };

    if (*validate) {
      const auto set = load_set(validate_opts);
      return emit_report(validate_report(set, display_name(validate_opts.set_file)), validate_opts, out);
    }

    if (*valuate) {
      const auto set = load_set(valuate_opts);
      std::optional<PreparedState> state;
      if (!state_file.empty()) {
        state = to_state(parse_state_document(read_file(state_file)));
      } else if (!state_code_text.empty()) {
        const auto code = parse_state_code(state_code_text);
        if (!code) throw ParseError("invalid state code '" + state_code_text + "' (expected e.g. z+x-)");
        state = build_state(*code);
      } else {
        throw ParseError("valuate needs --state or --state-file");
      }
      const Semantics semantics = semantics_text == "born"    ? Semantics::Born
                                  : semantics_text == "super" ? Semantics::Super
                                                              : Semantics::Bivalent;
      return emit_report(valuate_report(set, *state, semantics, display_name(valuate_opts.set_file)), valuate_opts,
                         out);
    }

    if (*color) {
      const auto set = load_set(color_opts);
      SolveOptions options;
      if (mode_text == "enumerate") options.mode = limit > 0 ? SolveMode::EnumerateUpTo : SolveMode::Enumerate;
      options.limit = limit;
      return emit_report(color_report(set, options, display_name(color_opts.set_file)), color_opts, out);
    }

    if (*lattice) {
      const auto set = load_set(lattice_opts);
      return emit_report(lattice_report(set, lattice_queries(ops), display_name(lattice_opts.set_file)),
                         lattice_opts, out);
    }
  } catch (const Error& e) {
    err << "kslogic: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace kslogic
