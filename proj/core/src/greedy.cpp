#include <chrono>
#include <vector>

#include "mclp/solver.hpp"

namespace mclp {

double marginal_benefit(std::int32_t j, const Bitset& current_mask,
                        const CoverageStructure& coverage, const Instance& instance) {
  return coverage_value(coverage.facility_sets[j].and_not(current_mask), instance);
}

std::pair<Solution, SolveStats> greedy_solve(const Instance& instance,
                                             const CoverageStructure& coverage) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t m = coverage.num_facilities();
  const auto budget = static_cast<std::size_t>(instance.budget);

  Bitset mask(instance.num_demand_points());
  std::vector<bool> used(m, false);
  std::vector<std::int32_t> selected_sites;
  SolveStats stats;

  while (selected_sites.size() < budget && selected_sites.size() < m) {
    std::size_t best = m;
    double best_gain = -1.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j]) continue;
      const double gain =
          marginal_benefit(static_cast<std::int32_t>(j), mask, coverage, instance);
      if (gain > best_gain) {  // ties keep the lower index
        best_gain = gain;
        best = j;
      }
    }
    if (best_gain <= 0.0 && instance.budget_mode == BudgetMode::AtMost) break;

    used[best] = true;
    selected_sites.push_back(coverage.site_ids[best]);
    mask |= coverage.facility_sets[best];
    ++stats.states_expanded;
  }

  // Exactly mode on reduced coverage may run out of facility indices before
  // reaching the budget; pad with the lowest-index unused original sites.
  if (instance.budget_mode == BudgetMode::Exactly) {
    std::vector<bool> taken(instance.num_sites(), false);
    for (std::int32_t id : selected_sites) taken[static_cast<std::size_t>(id)] = true;
    for (std::int32_t id = 0;
         selected_sites.size() < budget && id < static_cast<std::int32_t>(instance.num_sites());
         ++id) {
      if (!taken[id]) selected_sites.push_back(id);
    }
  }

  Solution sol = make_solution(std::move(selected_sites), instance, coverage, "greedy");
  stats.wall_time = std::chrono::steady_clock::now() - start;
  return {std::move(sol), stats};
}

}  // namespace mclp
