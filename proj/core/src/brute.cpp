#include <algorithm>
#include <string>
#include <vector>

#include "mclp/errors.hpp"
#include "mclp/solver.hpp"

namespace mclp {

namespace {

// C(m, k) with saturation at the cap so the guard cannot overflow.
std::uint64_t choose_capped(std::uint64_t m, std::uint64_t k, std::uint64_t cap) {
  if (k > m) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > cap) return cap + 1;
    r = r * (m - k + i) / i;
  }
  return std::min(r, cap + 1);
}

}  // namespace

Solution brute_force_solve(const Instance& instance, const CoverageStructure& coverage) {
  const std::size_t m = coverage.num_facilities();
  const auto p = static_cast<std::size_t>(
      std::min<std::int64_t>(instance.budget, static_cast<std::int64_t>(m)));

  std::uint64_t total = 0;
  const std::size_t k_lo = instance.budget_mode == BudgetMode::Exactly ? p : 0;
  for (std::size_t k = k_lo; k <= p; ++k) {
    total += choose_capped(m, k, kBruteForceSubsetCap);
    if (total > kBruteForceSubsetCap)
      throw CapExceededError("brute force would enumerate more than " +
                             std::to_string(kBruteForceSubsetCap) +
                             " facility subsets");
  }

  Bitset best_mask(instance.num_demand_points());
  double best_value = -1.0;
  std::vector<std::size_t> best_subset;

  std::vector<std::size_t> subset;   // current combination, ascending
  std::vector<Bitset> union_stack;   // union_stack[d] = union of subset[0..d]

  // Depth-first enumeration in ascending lexicographic order, so the first
  // subset reaching a value is automatically the lexicographically smallest
  // of that size prefix; ties across sizes are settled explicitly below.
  auto consider = [&](const Bitset& mask) {
    const double value = coverage_value(mask, instance);
    const bool better =
        value > best_value ||
        (value == best_value &&
         std::lexicographical_compare(subset.begin(), subset.end(),
                                      best_subset.begin(), best_subset.end()));
    if (better) {
      best_value = value;
      best_mask = mask;
      best_subset = subset;
    }
  };

  const Bitset empty_mask(instance.num_demand_points());
  if (instance.budget_mode == BudgetMode::AtMost || p == 0) consider(empty_mask);

  auto recurse = [&](auto&& self, std::size_t next) -> void {
    if (subset.size() == p) return;
    for (std::size_t j = next; j < m; ++j) {
      const Bitset& parent = subset.empty() ? empty_mask : union_stack.back();
      subset.push_back(j);
      union_stack.push_back(parent | coverage.facility_sets[j]);
      if (instance.budget_mode == BudgetMode::AtMost || subset.size() == p)
        consider(union_stack.back());
      self(self, j + 1);
      subset.pop_back();
      union_stack.pop_back();
    }
  };
  recurse(recurse, 0);

  std::vector<std::int32_t> selected;
  selected.reserve(best_subset.size());
  for (std::size_t j : best_subset) selected.push_back(coverage.site_ids[j]);

  // Exactly mode pads to the budget with the lowest-index unused sites; at
  // the optimum every unused facility has zero marginal coverage, so the
  // mask is unchanged (make_solution recomputes it regardless).
  if (instance.budget_mode == BudgetMode::Exactly) {
    std::vector<bool> taken(instance.num_sites(), false);
    for (std::int32_t id : selected) taken[static_cast<std::size_t>(id)] = true;
    for (std::int32_t id = 0;
         selected.size() < static_cast<std::size_t>(instance.budget) &&
         id < static_cast<std::int32_t>(instance.num_sites());
         ++id) {
      if (!taken[id]) selected.push_back(id);
    }
  }

  return make_solution(std::move(selected), instance, coverage, "brute");
}

}  // namespace mclp
