#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "kslogic/cli.hpp"
#include "kslogic/document.hpp"
#include "kslogic/error.hpp"
#include "support.hpp"

using namespace kslogic;

namespace {

const std::string kRoot = KSLOGIC_SOURCE_DIR;
const std::string kSetO = kRoot + "/data/paper_set_O.json";

std::string fixture(const std::string& name) { return kRoot + "/tests/data/" + name; }

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

void check_golden(const std::vector<std::string>& args, const std::string& golden) {
  const auto r = run(args);
  CAPTURE(golden);
  CHECK(r.status == 0);
  CHECK(r.err.empty());
  CHECK(r.out == testing::read_file(kRoot + "/tests/golden/" + golden));
  CHECK(run(args).out == r.out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("bundled set file is what the exporter produces") {
  CHECK(testing::read_file(kSetO) == print_set_document(set_o_document()));
  const auto r = run({"export-set"});
  CHECK(r.status == 0);
  CHECK(r.out == testing::read_file(kSetO));
}

TEST_CASE("bundled set file holds the printed matrices") {
  const auto set = to_operator_set(parse_set_document(testing::read_file(kSetO)));
  const auto literal = testing::literal_set_o_matrices();
  const auto members = set.distinct_members();
  REQUIRE(members.size() == 12);
  for (const auto* p : members) CHECK(p->matrix() == literal.at(p->label()));
}

TEST_CASE("documents round trip") {
  for (const char* f : {"data/paper_set_O.json", "data/ks_18_rays.json", "tests/data/single_context.json",
                        "tests/data/bad_sum.json"}) {
    CAPTURE(f);
    const auto doc = parse_set_document(testing::read_file(kRoot + "/" + f));
    CHECK(parse_set_document(print_set_document(doc)) == doc);
  }
  for (const char* f : {"state_explicit.json", "state_builtin.json"}) {
    const auto doc = parse_state_document(testing::read_file(fixture(f)));
    CHECK(parse_state_document(print_state_document(doc)) == doc);
  }
}

TEST_CASE("rays become projectors") {
  const auto set = to_operator_set(parse_set_document(testing::read_file(fixture("single_context.json"))));
  CHECK(set.find("up")->matrix() == ExactMatrix{{1, 0}, {0, 0}});
  const auto doc = parse_set_document(R"({"format": "kslogic-set", "version": 1, "dimension": 2,
    "contexts": [{"name": "D", "members": [{"ray": ["1", "1i"]}, {"ray": ["1", "-1i"]}]}]})");
  const auto s = to_operator_set(doc);
  CHECK(s.find("D.1") != nullptr);
  const GaussianRational h(Rational(1, 2));
  CHECK(s.find("D.1")->matrix() == ExactMatrix{{h, -h * GaussianRational::i()}, {h * GaussianRational::i(), h}});
}

TEST_CASE("input errors") {
  CHECK_THROWS_WITH_AS(to_operator_set(parse_set_document(testing::read_file(fixture("zero_ray.json")))),
                       "context 'K', member 'null': ray is the null vector", InvalidOperand);
  try {
    parse_set_document(testing::read_file(fixture("malformed.json")));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(e.column() > 0);
  }
  CHECK_THROWS_AS(parse_set_document(R"({"format": "kslogic-set", "version": 1, "dimension": 2,
    "contexts": [{"name": "D", "members": [{"ray": ["1", "1 i"]}]}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_set_document(R"({"format": "kslogic-set", "version": 1, "dimension": 2, "extra": 1,
    "contexts": []})"),
                  ParseError);
  CHECK_THROWS_AS(parse_state_document(R"({"format": "kslogic-state", "version": 1})"), ParseError);
}

TEST_CASE("golden machine reports") {
  check_golden({"validate", "--set", kSetO, "--format", "machine"}, "validate.json");
  for (const char* sem : {"bivalent", "born", "super"}) {
    check_golden({"valuate", "--set", kSetO, "--state", "z+z+", "--semantics", sem, "--format", "machine"},
                 std::string("valuate_z+z+_") + sem + ".json");
  }
  check_golden({"lattice", "--set", kSetO, "--ops", "meet P_z++ P_z+-", "--ops", "join C_z", "--ops",
                "complement P_z+-", "--ops", "meet P_z++ P_x++", "--ops", "join P_z++ P_x++", "--ops",
                "leq P_z++ P_z++", "--format", "machine"},
               "lattice.json");
  check_golden({"color", "--set", kSetO, "--mode", "enumerate", "--format", "machine"}, "color_enumerate.json");
}

TEST_CASE("exit status contract") {
  CHECK(run({"validate", "--set", fixture("single_context.json")}).status == 0);
  CHECK(run({"validate", "--set", fixture("bad_sum.json")}).status == 1);
  CHECK(run({"validate", "--set", fixture("malformed.json")}).status == 2);
  CHECK(run({"validate", "--set", fixture("zero_ray.json")}).status == 2);
  CHECK(run({"validate", "--set", fixture("not_projector.json")}).status == 2);
  CHECK(run({"validate", "--set", fixture("missing.json")}).status == 2);
  CHECK(run({"validate"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"--help"}).status == 0);

  CHECK(run({"color", "--set", fixture("single_context.json"), "--mode", "enumerate"}).status == 0);
  CHECK(run({"color", "--set", kRoot + "/data/ks_18_rays.json"}).status == 1);
  CHECK(run({"color", "--set", fixture("malformed.json")}).status == 2);
  CHECK(run({"color", "--set", fixture("bad_sum.json")}).status == 2);
  CHECK(run({"color", "--set", kSetO, "--mode", "sideways"}).status == 2);

  CHECK(run({"valuate", "--set", kSetO, "--state", "z+x+"}).status == 0);
  CHECK(run({"valuate", "--set", kSetO, "--state", "q+q+"}).status == 2);
  CHECK(run({"valuate", "--set", kSetO}).status == 2);
  CHECK(run({"valuate", "--set", kSetO, "--state", "z+z+", "--semantics", "fuzzy"}).status == 2);
  CHECK(run({"valuate", "--set", fixture("single_context.json"), "--state", "z+z+"}).status == 2);

  CHECK(run({"lattice", "--set", kSetO, "--ops", "meet P_z++ P_w"}).status == 2);
  CHECK(run({"lattice", "--set", kSetO, "--ops", "twist P_z++"}).status == 2);
  CHECK(run({"lattice", "--set", kSetO, "--ops", "leq P_z++ P_x++"}).status == 0);
}

TEST_CASE("errors go to the error stream") {
  const auto r = run({"lattice", "--set", kSetO, "--ops", "meet P_z++ P_w"});
  CHECK(r.out.empty());
  CHECK(r.err.find("P_w") != std::string::npos);
  const auto m = run({"validate", "--set", fixture("malformed.json")});
  CHECK(m.err.find("line 5") != std::string::npos);
}

TEST_CASE("valuate reports for other states") {
  const auto r = run({"valuate", "--set", kSetO, "--state", "z+x+", "--format", "machine"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("\"valued_1\": 0") != std::string::npos);
  CHECK(r.out.find("\"total\": false") != std::string::npos);
  const auto f = run({"valuate", "--set", kSetO, "--state-file", fixture("state_builtin.json"), "--format", "machine"});
  CHECK(f.status == 0);
  CHECK(f.out.find("\"bivalent_contexts\": [\"C_x\"]") != std::string::npos);
  const auto e = run({"valuate", "--set", kSetO, "--state-file", fixture("state_explicit.json"), "--format", "machine"});
  CHECK(e.out.find("\"state\": \"e1\"") != std::string::npos);
}

TEST_CASE("human and machine renderings carry the same verdict") {
  const auto h = run({"color", "--set", fixture("single_context.json"), "--mode", "enumerate"});
  const auto m = run({"color", "--set", fixture("single_context.json"), "--mode", "enumerate", "--format", "machine"});
  CHECK(h.status == m.status);
  CHECK(h.out.find("count: 2") != std::string::npos);
  CHECK(m.out.find("\"count\": 2") != std::string::npos);
}

TEST_CASE("output flag writes the report to a file") {
  const auto path = (std::filesystem::temp_directory_path() / "kslogic_cli_output_test.json").string();
  std::filesystem::remove(path);
  const auto r = run({"validate", "--set", kSetO, "--format", "machine", "--output", path});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(testing::read_file(path) == testing::read_file(kRoot + "/tests/golden/validate.json"));
  std::filesystem::remove(path);
}

}  // TEST_SUITE
