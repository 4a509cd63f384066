#include "mclp/coverage.hpp"

#include <string>

#include "mclp/errors.hpp"

namespace mclp {

CoverageStructure build_coverage(const Instance& instance) {
  const std::size_t n = instance.num_demand_points();
  const std::size_t m = instance.num_sites();
  if (n > kMaxDemandPoints) {
    throw CapExceededError("instance has " + std::to_string(n) +
                           " demand points; coverage masks support at most " +
                           std::to_string(kMaxDemandPoints));
  }

  CoverageStructure cov;
  cov.facility_sets.assign(m, Bitset(n));
  cov.demand_neighbors.assign(n, {});
  cov.site_ids.resize(m);

  const double reach = instance.radius + kDistanceEpsilon;
  for (std::size_t j = 0; j < m; ++j) {
    cov.site_ids[j] = static_cast<std::int32_t>(j);
    for (std::size_t i = 0; i < n; ++i) {
      if (distance(instance.demand_points[i], instance.sites[j]) <= reach) {
        cov.facility_sets[j].set(i);
        cov.demand_neighbors[i].push_back(static_cast<std::int32_t>(j));
      }
    }
  }

  cov.total_weight = 0.0;
  for (const DemandPoint& d : instance.demand_points) cov.total_weight += d.weight;
  return cov;
}

double coverage_value(const Bitset& mask, const Instance& instance) {
  double sum = 0.0;
  mask.for_each_set_bit(
      [&](std::size_t i) { sum += instance.demand_points[i].weight; });
  return sum;
}

}  // namespace mclp
