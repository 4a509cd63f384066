#include "mclp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mclp/errors.hpp"
#include "mclp/random.hpp"

namespace mclp {

std::int32_t GeneratorConfig::derived_budget() const {
  std::int32_t b;
  if (budget) {
    b = *budget;
  } else {
    b = static_cast<std::int32_t>(std::ceil(*budget_fraction * static_cast<double>(m)));
  }
  return std::clamp(b, std::int32_t{1}, m);
}

void GeneratorConfig::validate() const {
  if (n < 1) throw ConfigError("n: must be >= 1");
  if (m < 1) throw ConfigError("m: must be >= 1");
  if (budget.has_value() == budget_fraction.has_value())
    throw ConfigError("budget: exactly one of budget and budget_fraction must be set");
  if (budget && (*budget < 1 || *budget > m))
    throw ConfigError("budget: must be in [1, m]");
  if (budget_fraction && !(*budget_fraction > 0.0 && *budget_fraction <= 1.0))
    throw ConfigError("budget_fraction: must be in (0, 1]");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw ConfigError("radius: must be positive and finite");
  if (!(area > 0.0) || !std::isfinite(area))
    throw ConfigError("area: must be positive and finite");
  if (!(weight_low > 0.0) || !(weight_low <= weight_high))
    throw ConfigError("weight_range: requires 0 < low <= high");
  if (distribution == Distribution::Clustered) {
    if (cluster_count < 1) throw ConfigError("cluster_count: must be >= 1");
    if (!(cluster_spread > 0.0)) throw ConfigError("cluster_spread: must be positive");
  }
}

Instance generate(const GeneratorConfig& config) {
  config.validate();
  Xorshift64Star rng(config.seed);

  Instance inst;
  inst.radius = config.radius;
  inst.budget = config.derived_budget();
  inst.budget_mode = config.budget_mode;
  inst.demand_points.reserve(static_cast<std::size_t>(config.n));
  inst.sites.reserve(static_cast<std::size_t>(config.m));

  if (config.distribution == Distribution::Uniform) {
    for (std::int32_t i = 0; i < config.n; ++i) {
      const double x = rng.next_double(0.0, config.area);
      const double y = rng.next_double(0.0, config.area);
      inst.demand_points.push_back(DemandPoint{i, x, y, 0.0});
    }
  } else {
    std::vector<Point> centers(static_cast<std::size_t>(config.cluster_count));
    for (Point& c : centers) {
      c.x = rng.next_double(0.0, config.area);
      c.y = rng.next_double(0.0, config.area);
    }
    // Round-robin assignment: demand point i belongs to center i mod k.
    for (std::int32_t i = 0; i < config.n; ++i) {
      const Point& c = centers[static_cast<std::size_t>(i) % centers.size()];
      const double x =
          std::clamp(c.x + rng.next_gaussian() * config.cluster_spread, 0.0, config.area);
      const double y =
          std::clamp(c.y + rng.next_gaussian() * config.cluster_spread, 0.0, config.area);
      inst.demand_points.push_back(DemandPoint{i, x, y, 0.0});
    }
  }

  for (std::int32_t i = 0; i < config.n; ++i)
    inst.demand_points[static_cast<std::size_t>(i)].weight =
        rng.next_double(config.weight_low, config.weight_high);

  for (std::int32_t j = 0; j < config.m; ++j) {
    const double x = rng.next_double(0.0, config.area);
    const double y = rng.next_double(0.0, config.area);
    inst.sites.push_back(FacilitySite{j, x, y});
  }

  inst.validate();
  return inst;
}

}  // namespace mclp
