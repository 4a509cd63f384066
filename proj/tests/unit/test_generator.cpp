#include <doctest.h>

#include <cmath>

#include "mclp/errors.hpp"
#include "mclp/generator.hpp"
#include "mclp/instance_io.hpp"

using namespace mclp;

namespace {

GeneratorConfig base_config() {
  GeneratorConfig c;
  c.n = 40;
  c.m = 12;
  c.budget = 4;
  c.radius = 15.0;
  c.area = 100.0;
  c.seed = 42;
  return c;
}

}  // namespace

TEST_CASE("generate: coordinates stay inside the area, weights inside the range") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GeneratorConfig c = base_config();
    c.seed = seed;
    c.distribution = seed % 2 ? Distribution::Clustered : Distribution::Uniform;
    const Instance inst = generate(c);
    REQUIRE(inst.num_demand_points() == 40);
    REQUIRE(inst.num_sites() == 12);
    for (const auto& d : inst.demand_points) {
      CHECK(d.x >= 0.0);
      CHECK(d.x <= c.area);
      CHECK(d.y >= 0.0);
      CHECK(d.y <= c.area);
      CHECK(d.weight >= c.weight_low);
      CHECK(d.weight <= c.weight_high);
    }
    for (const auto& s : inst.sites) {
      CHECK(s.x >= 0.0);
      CHECK(s.x <= c.area);
    }
  }
}

TEST_CASE("generate: single point instance") {
  GeneratorConfig c;
  c.n = 1;
  c.m = 1;
  c.budget = 1;
  c.seed = 7;
  const Instance inst = generate(c);
  CHECK(inst.num_demand_points() == 1);
  CHECK(inst.demand_points[0].x >= 0.0);
  CHECK(inst.demand_points[0].x <= c.area);
}

TEST_CASE("generate: identical config means bit-identical instances") {
  const GeneratorConfig c = base_config();
  CHECK(serialize_instance(generate(c)) == serialize_instance(generate(c)));

  GeneratorConfig other = c;
  other.seed = c.seed + 1;
  CHECK(serialize_instance(generate(other)) != serialize_instance(generate(c)));
}

TEST_CASE("generate: vanishing cluster spread collapses points onto centers") {
  GeneratorConfig c = base_config();
  c.distribution = Distribution::Clustered;
  c.cluster_count = 3;
  c.cluster_spread = 1e-300;
  const Instance inst = generate(c);
  // round-robin assignment: points i and i+3 share a center exactly
  for (std::size_t i = 0; i + 3 < inst.num_demand_points(); ++i) {
    CHECK(inst.demand_points[i].x == inst.demand_points[i + 3].x);
    CHECK(inst.demand_points[i].y == inst.demand_points[i + 3].y);
  }
}

TEST_CASE("generate: empirical mean of uniform x-coordinates") {
  // mean of n=100 uniforms on [0,100] is within 3 standard errors
  // (100/sqrt(12) * 3/sqrt(100) = 8.66) of 50 in at least 99% of seeds
  const double bound = 100.0 / std::sqrt(12.0) * 3.0 / std::sqrt(100.0);
  int in_range = 0;
  const int trials = 200;
  for (int seed = 0; seed < trials; ++seed) {
    GeneratorConfig c;
    c.n = 100;
    c.m = 1;
    c.budget = 1;
    c.area = 100.0;
    c.seed = static_cast<std::uint64_t>(seed);
    const Instance inst = generate(c);
    double mean = 0.0;
    for (const auto& d : inst.demand_points) mean += d.x;
    mean /= 100.0;
    if (std::abs(mean - 50.0) <= bound) ++in_range;
  }
  CHECK(in_range >= trials * 99 / 100);
}

TEST_CASE("generator config: budget fraction maps to ceil(f*m) clamped to [1, m]") {
  GeneratorConfig c = base_config();
  c.budget.reset();
  c.budget_fraction = 0.3;
  CHECK(c.derived_budget() == 4);  // ceil(0.3 * 12)
  c.budget_fraction = 1.0;
  CHECK(c.derived_budget() == 12);
  c.budget_fraction = 1e-9;
  CHECK(c.derived_budget() == 1);
}

TEST_CASE("generator config: invalid configs are rejected") {
  GeneratorConfig c = base_config();
  c.n = 0;
  CHECK_THROWS_AS(generate(c), ConfigError);

  c = base_config();
  c.budget = 13;  // > m
  CHECK_THROWS_AS(generate(c), ConfigError);

  c = base_config();
  c.budget_fraction = 0.5;  // both budget and fraction set
  CHECK_THROWS_AS(generate(c), ConfigError);

  c = base_config();
  c.weight_low = 0.0;
  CHECK_THROWS_AS(generate(c), ConfigError);

  c = base_config();
  c.weight_low = 5.0;
  c.weight_high = 2.0;
  CHECK_THROWS_AS(generate(c), ConfigError);

  c = base_config();
  c.distribution = Distribution::Clustered;
  c.cluster_spread = 0.0;
  CHECK_THROWS_AS(generate(c), ConfigError);
}
