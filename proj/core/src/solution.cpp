#include "mclp/solution.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

namespace mclp {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Solution make_solution(std::vector<std::int32_t> selected, const Instance& instance,
                       const CoverageStructure& coverage, std::string solver_name) {
  std::sort(selected.begin(), selected.end());
  Solution sol;
  sol.selected = std::move(selected);
  sol.covered_mask = Bitset(instance.num_demand_points());
  sol.solver_name = std::move(solver_name);

  // site id -> facility index in this coverage structure
  std::unordered_map<std::int32_t, std::size_t> index_of;
  index_of.reserve(coverage.site_ids.size());
  for (std::size_t f = 0; f < coverage.site_ids.size(); ++f)
    index_of.emplace(coverage.site_ids[f], f);

  for (std::int32_t id : sol.selected) {
    auto it = index_of.find(id);
    if (it != index_of.end()) sol.covered_mask |= coverage.facility_sets[it->second];
  }
  sol.objective = coverage_value(sol.covered_mask, instance);
  return sol;
}

ValidationReport validate_solution(const Solution& solution, const Instance& instance,
                                   const CoverageStructure& coverage) {
  ValidationReport report;
  const auto m = static_cast<std::int32_t>(instance.num_sites());
  const auto count = static_cast<std::int32_t>(solution.selected.size());

  if (instance.budget_mode == BudgetMode::AtMost) {
    if (count > instance.budget)
      report.violations.push_back("budget: " + std::to_string(count) +
                                  " facilities selected, at most " +
                                  std::to_string(instance.budget) + " allowed");
  } else if (count != instance.budget) {
    report.violations.push_back("budget: " + std::to_string(count) +
                                " facilities selected, exactly " +
                                std::to_string(instance.budget) + " required");
  }

  bool ids_ok = true;
  for (std::size_t k = 0; k < solution.selected.size(); ++k) {
    const std::int32_t id = solution.selected[k];
    if (id < 0 || id >= m) {
      report.violations.push_back("selected[" + std::to_string(k) + "]: site id " +
                                  std::to_string(id) + " out of range [0, " +
                                  std::to_string(m) + ")");
      ids_ok = false;
    }
    if (k > 0 && solution.selected[k - 1] >= id) {
      report.violations.push_back("selected: ids must be sorted and unique");
      ids_ok = false;
      break;
    }
  }

  if (solution.covered_mask.size() != instance.num_demand_points()) {
    report.violations.push_back("covered_mask: sized for " +
                                std::to_string(solution.covered_mask.size()) +
                                " demand points, instance has " +
                                std::to_string(instance.num_demand_points()));
    return report;
  }

  if (ids_ok) {
    std::unordered_map<std::int32_t, std::size_t> index_of;
    for (std::size_t f = 0; f < coverage.site_ids.size(); ++f)
      index_of.emplace(coverage.site_ids[f], f);

    Bitset expected(instance.num_demand_points());
    for (std::int32_t id : solution.selected) {
      auto it = index_of.find(id);
      if (it != index_of.end()) expected |= coverage.facility_sets[it->second];
    }
    if (solution.covered_mask.and_not(expected).any())
      report.violations.push_back(
          "coverage: covered_mask claims demand no selected facility covers");
    if (expected.and_not(solution.covered_mask).any())
      report.violations.push_back(
          "coverage: covered_mask misses demand the selected facilities cover");
  }

  const double recomputed = coverage_value(solution.covered_mask, instance);
  if (recomputed != solution.objective)
    report.violations.push_back("objective: stored " + fmt_double(solution.objective) +
                                " but covered_mask weighs " + fmt_double(recomputed));
  return report;
}

}  // namespace mclp
