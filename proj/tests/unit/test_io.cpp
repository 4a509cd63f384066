#include <doctest.h>

#include <string>

#include "../support/builders.hpp"
#include "mclp/errors.hpp"
#include "mclp/generator.hpp"
#include "mclp/instance_io.hpp"
#include "mclp/solution_io.hpp"
#include "mclp/solver.hpp"

using namespace mclp;
using mclp::testing::random_instance;

namespace {

const char* kValidInstance = R"({
  "budget": 1,
  "budget_mode": "at_most",
  "demand_points": [
    {"weight": 2.5, "x": 0, "y": 0},
    {"weight": 1.0, "x": 3, "y": 4}
  ],
  "radius": 5,
  "sites": [
    {"x": 1, "y": 1}
  ]
})";

}  // namespace

TEST_CASE("parse_instance: accepts the documented schema") {
  const Instance inst = parse_instance(kValidInstance);
  CHECK(inst.num_demand_points() == 2);
  CHECK(inst.num_sites() == 1);
  CHECK(inst.radius == 5.0);
  CHECK(inst.budget == 1);
  CHECK(inst.budget_mode == BudgetMode::AtMost);
  CHECK(inst.demand_points[1].weight == 1.0);
  CHECK(inst.demand_points[1].id == 1);
}

TEST_CASE("parse_instance: error taxonomy") {
  // malformed syntax
  CHECK_THROWS_AS(parse_instance("{"), ParseError);
  // missing key
  CHECK_THROWS_AS(parse_instance(R"({"budget": 1})"), SchemaError);
  // wrong type
  CHECK_THROWS_AS(
      parse_instance(
          R"({"budget": 1, "budget_mode": "at_most", "demand_points": [], "radius": "5", "sites": []})"),
      SchemaError);
  // unknown budget mode
  CHECK_THROWS_AS(
      parse_instance(
          R"({"budget": 1, "budget_mode": "sometimes", "demand_points": [{"weight": 1, "x": 0, "y": 0}], "radius": 5, "sites": [{"x": 0, "y": 0}]})"),
      SchemaError);
}

TEST_CASE("parse_instance: invariant violations name the offending key") {
  const std::string negative_weight =
      R"({"budget": 1, "budget_mode": "at_most", "demand_points": [{"weight": 1, "x": 0, "y": 0}, {"weight": -1, "x": 1, "y": 1}], "radius": 5, "sites": [{"x": 0, "y": 0}]})";
  try {
    parse_instance(negative_weight);
    FAIL("expected InvariantError");
  } catch (const InvariantError& e) {
    CHECK(std::string(e.what()).find("demand_points[1].weight") != std::string::npos);
  }

  const std::string budget_too_big =
      R"({"budget": 2, "budget_mode": "at_most", "demand_points": [{"weight": 1, "x": 0, "y": 0}], "radius": 5, "sites": [{"x": 0, "y": 0}]})";
  try {
    parse_instance(budget_too_big);
    FAIL("expected InvariantError");
  } catch (const InvariantError& e) {
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
}

TEST_CASE("instance serialization: canonical fixed point") {
  const std::string canonical = serialize_instance(parse_instance(kValidInstance));
  CHECK(serialize_instance(parse_instance(canonical)) == canonical);

  for (std::uint64_t seed = 50; seed < 60; ++seed) {
    const Instance inst = random_instance(seed);
    const std::string once = serialize_instance(inst);
    const std::string twice = serialize_instance(parse_instance(once));
    CHECK(once == twice);
  }
}

TEST_CASE("solution serialization: worked example and canonical ids") {
  const auto sys = mclp::testing::make_set_system({{0, 1}, {1, 2}, {2, 3}},
                                                  {5, 2, 3, 4}, 2);
  const auto [sol, stats] = dp_solve(sys.instance, sys.coverage);
  const std::string bytes = serialize_solution(sol, stats, sys.coverage);
  CHECK(bytes.find("\"selected\": [0, 2]") != std::string::npos);
  CHECK(bytes.find("\"covered\": [0, 1, 2, 3]") != std::string::npos);
  CHECK(bytes.find("\"objective\": 14") != std::string::npos);
  CHECK(bytes.find("\"exact\": true") != std::string::npos);

  const ParsedSolution parsed = parse_solution(bytes, sys.instance);
  CHECK(parsed.solution.selected == sol.selected);
  CHECK(parsed.solution.covered_mask == sol.covered_mask);
  CHECK(parsed.solution.objective == sol.objective);

  SolveStats parsed_stats;
  parsed_stats.exact = parsed.exact;
  CHECK(serialize_solution(parsed.solution, stats, sys.coverage) == bytes);
}

TEST_CASE("solution serialization: empty selection") {
  const auto sys = mclp::testing::make_set_system({{}}, {1.0}, 1);
  const auto [sol, stats] = greedy_solve(sys.instance, sys.coverage);
  const std::string bytes = serialize_solution(sol, stats, sys.coverage);
  CHECK(bytes.find("\"selected\": []") != std::string::npos);
  CHECK(bytes.find("\"objective\": 0") != std::string::npos);
}

TEST_CASE("parse_solution: rejects out-of-range covered ids") {
  const auto sys = mclp::testing::make_set_system({{0}}, {1.0}, 1);
  CHECK_THROWS_AS(
      parse_solution(
          R"({"coverage_percent": 0, "covered": [7], "exact": true, "objective": 0, "selected": [], "solver_name": "x", "stats": {}})",
          sys.instance),
      InvariantError);
}

TEST_CASE("objective precision survives the serialize/parse round trip") {
  for (std::uint64_t seed = 80; seed < 90; ++seed) {
    const Instance inst = random_instance(seed);
    const CoverageStructure cov = build_coverage(inst);
    const auto [sol, stats] = dp_solve(inst, cov);
    const ParsedSolution parsed =
        parse_solution(serialize_solution(sol, stats, cov), inst);
    CHECK(parsed.solution.objective == sol.objective);  // %.17g is lossless
  }
}
