#include <doctest.h>

#include "kslogic/coloring.hpp"
#include "kslogic/document.hpp"
#include "kslogic/error.hpp"
#include "support.hpp"

using namespace kslogic;

namespace {

Projector ray(ExactVector v, std::string label) { return Projector(ray_projector(v), std::move(label)); }

// C1 = {e1, e2, e3}, C2 = {e1, e2+e3, e2-e3}; e1 is shared.
OperatorSet two_bases() {
  Context c1{"C1", {ray({1, 0, 0}, "e1"), ray({0, 1, 0}, "e2"), ray({0, 0, 1}, "e3")}};
  Context c2{"C2", {ray({1, 0, 0}, "f1"), ray({0, 1, 1}, "f2"), ray({0, 1, -1}, "f3")}};
  return OperatorSet(3, {c1, c2});
}

OperatorSet bundled(const char* name) {
  return to_operator_set(parse_set_document(testing::read_file(std::string(KSLOGIC_SOURCE_DIR) + "/data/" + name)));
}

}  // namespace

TEST_SUITE("coloring") {

TEST_CASE("the twelve-operator set has 64 colorings") {
  const auto set = build_set_o();
  const auto p = build_problem(set);
  CHECK(p.variables().size() == 12);
  CHECK(p.shared_variables() == 0);
  const auto r = solve(p, {SolveMode::Enumerate});
  CHECK(r.status == ColoringStatus::Colorable);
  REQUIRE(r.count);
  CHECK(*r.count == 64);
  CHECK(*r.count == testing::brute_force_coloring_count(set));
  CHECK(r.exhausted);
  REQUIRE(r.witness);
  CHECK(verify_coloring(p, *r.witness));
}

TEST_CASE("a single context has one coloring per member") {
  const OperatorSet set(4, {build_context(Axis::Y)});
  CHECK(*solve(build_problem(set), {SolveMode::Enumerate}).count == 4);
}

TEST_CASE("a repeated context adds no variables") {
  const OperatorSet set(4, {build_context(Axis::Z), build_context(Axis::Z)});
  const auto p = build_problem(set);
  CHECK(p.variables().size() == 4);
  CHECK(p.shared_variables() == 4);
  CHECK(*solve(p, {SolveMode::Enumerate}).count == 4);
}

TEST_CASE("matrices are identified across differing labels") {
  const auto set = two_bases();
  const auto p = build_problem(set);
  CHECK(p.variables().size() == 5);
  CHECK(p.variable_of("e1") == p.variable_of("f1"));
  CHECK(p.variables()[0].aliases == std::vector<std::string>{"f1"});
  CHECK(p.shared_variables() == 1);
  const auto r = solve(p, {SolveMode::Enumerate});
  CHECK(*r.count == 5);
  CHECK(*r.count == testing::brute_force_coloring_count(set));
  // 1 is tried first, so the first solution makes e1 true.
  CHECK(r.witness->at("e1") == 1);
}

TEST_CASE("enumerate up to a limit") {
  const auto p = build_problem(build_set_o());
  const auto r = solve(p, {SolveMode::EnumerateUpTo, 10});
  CHECK(*r.count == 10);
  CHECK_FALSE(r.exhausted);
  const auto all = solve(p, {SolveMode::EnumerateUpTo, 100});
  CHECK(*all.count == 64);
  CHECK(all.exhausted);
}

TEST_CASE("decide mode stops at the first witness") {
  const auto p = build_problem(build_set_o());
  const auto d = solve(p);
  const auto e = solve(p, {SolveMode::Enumerate});
  CHECK(d.status == ColoringStatus::Colorable);
  CHECK_FALSE(d.count);
  CHECK(d.witness == e.witness);
  CHECK(d.nodes_explored < e.nodes_explored);
}

TEST_CASE("solving is deterministic") {
  const auto p = build_problem(two_bases());
  const auto a = solve(p, {SolveMode::Enumerate});
  const auto b = solve(p, {SolveMode::Enumerate});
  CHECK(a.witness == b.witness);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.count == b.count);
}

TEST_CASE("witness verification") {
  const auto p = build_problem(two_bases());
  CHECK(verify_coloring(p, {{"e1", 1}, {"e2", 0}, {"e3", 0}, {"f2", 0}, {"f3", 0}}));
  CHECK_FALSE(verify_coloring(p, {{"e1", 0}, {"e2", 1}, {"e3", 0}, {"f2", 0}, {"f3", 0}}));
  CHECK_FALSE(verify_coloring(p, {{"e1", 1}, {"e2", 1}, {"e3", 0}, {"f2", 0}, {"f3", 0}}));
  CHECK_THROWS_AS(verify_coloring(p, {{"e1", 1}, {"e2", 0}, {"e3", 0}, {"f2", 0}}), InvalidOperand);
  CHECK_THROWS_AS(verify_coloring(p, {{"e1", 2}, {"e2", 0}, {"e3", 0}, {"f2", 0}, {"f3", 0}}), InvalidOperand);
}

TEST_CASE("invalid contexts are refused") {
  Context c{"half", {build_projector(Axis::Z, Sign::Plus, Sign::Plus)}};
  CHECK_THROWS_AS(build_problem(OperatorSet(4, {c})), InvalidOperand);
}

TEST_CASE("random small sets agree with the brute-force count") {
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 25; ++trial) {
    const auto set = testing::random_small_set(rng, 6, 3);
    const auto p = build_problem(set);
    const auto r = solve(p, {SolveMode::Enumerate});
    CAPTURE(trial);
    CHECK(*r.count == testing::brute_force_coloring_count(set));
    CHECK((r.status == ColoringStatus::Colorable) == (*r.count > 0));
    const auto d = solve(p);
    CHECK(d.status == r.status);
    if (r.witness) CHECK(verify_coloring(p, *r.witness));
  }
}

TEST_CASE("the bundled 18-ray set is uncolorable") {
  const auto set = bundled("ks_18_rays.json");
  const auto p = build_problem(set);
  CHECK(p.variables().size() == 18);
  CHECK(p.contexts().size() == 9);
  for (std::size_t v = 0; v < p.variables().size(); ++v) {
    std::size_t uses = 0;
    for (const auto& c : p.contexts()) uses += std::count(c.begin(), c.end(), v);
    CHECK(uses == 2);
  }
  const auto r = solve(p);
  CHECK(r.status == ColoringStatus::Uncolorable);
  CHECK_FALSE(r.witness);
  CHECK(r.exhausted);
  CHECK(testing::brute_force_coloring_count(set) == 0);
}

}  // TEST_SUITE
