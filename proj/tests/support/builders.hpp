#pragma once

// Shared helpers for building small instances in tests, including instances
// with hand-picked coverage sets (facilities placed on top of the demand
// points they should cover).

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mclp/coverage.hpp"
#include "mclp/generator.hpp"
#include "mclp/instance.hpp"
#include "mclp/random.hpp"

namespace mclp::testing {

inline Instance make_instance(std::vector<DemandPoint> demands,
                              std::vector<FacilitySite> sites, double radius,
                              std::int32_t budget,
                              BudgetMode mode = BudgetMode::AtMost) {
  Instance inst;
  inst.demand_points = std::move(demands);
  inst.sites = std::move(sites);
  inst.radius = radius;
  inst.budget = budget;
  inst.budget_mode = mode;
  inst.validate();
  return inst;
}

struct SetSystem {
  Instance instance;
  CoverageStructure coverage;
};

/// Instance plus a CoverageStructure whose facility_sets are exactly the
/// given demand-id lists. Arbitrary set systems are not always realizable as
/// planar disks, so coverage is injected directly; coordinates are
/// placeholders.
inline SetSystem make_set_system(const std::vector<std::vector<std::size_t>>& sets,
                                 const std::vector<double>& weights, std::int32_t budget,
                                 BudgetMode mode = BudgetMode::AtMost) {
  SetSystem out;
  const std::size_t n = weights.size();
  const std::size_t m = sets.size();

  for (std::size_t i = 0; i < n; ++i)
    out.instance.demand_points.push_back(
        DemandPoint{static_cast<std::int32_t>(i), static_cast<double>(i), 0.0, weights[i]});
  for (std::size_t j = 0; j < m; ++j)
    out.instance.sites.push_back(
        FacilitySite{static_cast<std::int32_t>(j), 0.0, static_cast<double>(j)});
  out.instance.radius = 1.0;
  out.instance.budget = budget;
  out.instance.budget_mode = mode;
  out.instance.validate();

  out.coverage.facility_sets.assign(m, Bitset(n));
  out.coverage.demand_neighbors.assign(n, {});
  out.coverage.site_ids.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    out.coverage.site_ids[j] = static_cast<std::int32_t>(j);
    for (std::size_t i : sets[j]) {
      out.coverage.facility_sets[j].set(i);
      out.coverage.demand_neighbors[i].push_back(static_cast<std::int32_t>(j));
    }
  }
  out.coverage.total_weight = 0.0;
  for (double w : weights) out.coverage.total_weight += w;
  return out;
}

/// Random small instance drawn through the library generator; `salt`
/// diversifies sizes and modes deterministically.
inline Instance random_instance(std::uint64_t seed, std::int32_t n_max = 12,
                                std::int32_t m_max = 10, std::int32_t p_max = 4) {
  std::uint64_t s = seed;
  GeneratorConfig config;
  config.n = 1 + static_cast<std::int32_t>(splitmix64(s) % static_cast<std::uint64_t>(n_max));
  config.m = 1 + static_cast<std::int32_t>(splitmix64(s) % static_cast<std::uint64_t>(m_max));
  config.budget = 1 + static_cast<std::int32_t>(splitmix64(s) %
                                                static_cast<std::uint64_t>(
                                                    std::min(config.m, p_max)));
  config.budget_mode = splitmix64(s) % 2 == 0 ? BudgetMode::AtMost : BudgetMode::Exactly;
  config.distribution =
      splitmix64(s) % 2 == 0 ? Distribution::Uniform : Distribution::Clustered;
  config.cluster_count = 1 + static_cast<std::int32_t>(splitmix64(s) % 3);
  config.cluster_spread = 4.0;
  config.radius = 8.0 + static_cast<double>(splitmix64(s) % 30);
  config.area = 100.0;
  config.seed = splitmix64(s);
  return generate(config);
}

}  // namespace mclp::testing
