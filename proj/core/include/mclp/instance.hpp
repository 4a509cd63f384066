#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace mclp {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// A weighted spatial location requiring service. Ids are the 0-based
/// positions within the owning Instance.
struct DemandPoint {
  std::int32_t id = 0;
  double x = 0.0;
  double y = 0.0;
  double weight = 0.0;  // nonnegative
};

/// A candidate facility placement, same coordinate units as demand points.
struct FacilitySite {
  std::int32_t id = 0;
  double x = 0.0;
  double y = 0.0;
};

enum class BudgetMode { AtMost, Exactly };

inline const char* to_string(BudgetMode mode) {
  return mode == BudgetMode::AtMost ? "at_most" : "exactly";
}

/// A full problem definition: weighted demand points, candidate sites, a
/// service radius, and a facility budget. Immutable after construction;
/// `validate()` enforces the model invariants.
struct Instance {
  std::vector<DemandPoint> demand_points;
  std::vector<FacilitySite> sites;
  double radius = 0.0;         // > 0
  std::int32_t budget = 1;     // in [1, sites.size()]
  BudgetMode budget_mode = BudgetMode::AtMost;

  std::size_t num_demand_points() const { return demand_points.size(); }
  std::size_t num_sites() const { return sites.size(); }

  /// Throws InvariantError naming the offending field if any model
  /// invariant is violated.
  void validate() const;

  Instance with_radius(double r) const {
    Instance copy = *this;
    copy.radius = r;
    return copy;
  }
  Instance with_budget(std::int32_t p) const {
    Instance copy = *this;
    copy.budget = p;
    return copy;
  }
};

/// Euclidean distance in the plane.
inline double distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

inline double distance(const DemandPoint& d, const FacilitySite& s) {
  return distance(Point{d.x, d.y}, Point{s.x, s.y});
}

}  // namespace mclp
