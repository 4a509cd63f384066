#include "mclp/instance.hpp"

#include <cmath>

#include "mclp/errors.hpp"

namespace mclp {

void Instance::validate() const {
  if (demand_points.empty()) throw InvariantError("demand_points: must not be empty");
  if (sites.empty()) throw InvariantError("sites: must not be empty");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw InvariantError("radius: must be positive and finite");
  if (budget < 1 || static_cast<std::size_t>(budget) > sites.size())
    throw InvariantError("budget: must be in [1, " + std::to_string(sites.size()) + "]");

  for (std::size_t i = 0; i < demand_points.size(); ++i) {
    const DemandPoint& d = demand_points[i];
    const std::string at = "demand_points[" + std::to_string(i) + "]";
    if (d.id != static_cast<std::int32_t>(i))
      throw InvariantError(at + ".id: ids must be exactly 0..n-1 in order");
    if (!std::isfinite(d.x) || !std::isfinite(d.y))
      throw InvariantError(at + ": coordinates must be finite");
    if (!(d.weight >= 0.0) || !std::isfinite(d.weight))
      throw InvariantError(at + ".weight: must be finite and >= 0");
  }
  for (std::size_t j = 0; j < sites.size(); ++j) {
    const FacilitySite& s = sites[j];
    const std::string at = "sites[" + std::to_string(j) + "]";
    if (s.id != static_cast<std::int32_t>(j))
      throw InvariantError(at + ".id: ids must be exactly 0..m-1 in order");
    if (!std::isfinite(s.x) || !std::isfinite(s.y))
      throw InvariantError(at + ": coordinates must be finite");
  }
}

}  // namespace mclp
