#include <algorithm>

#include "mclp/solver.hpp"

namespace mclp {

PreprocessResult preprocess(const CoverageStructure& coverage) {
  const std::size_t m = coverage.num_facilities();
  std::vector<bool> removed(m, false);

  // Facility j is dominated by k when S_j is a strict subset of S_k, or the
  // sets are identical and k has the lower index. Removing dominated
  // facilities cannot change the optimum: any selection using j does at
  // least as well with k instead.
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m && !removed[j]; ++k) {
      if (k == j || removed[k]) continue;
      const Bitset& sj = coverage.facility_sets[j];
      const Bitset& sk = coverage.facility_sets[k];
      if (sj == sk ? k < j : sj.is_subset_of(sk)) removed[j] = true;
    }
  }

  PreprocessResult result;
  const std::size_t n = coverage.demand_neighbors.size();
  result.coverage.total_weight = coverage.total_weight;
  result.coverage.demand_neighbors.assign(n, {});
  for (std::size_t j = 0; j < m; ++j) {
    if (removed[j]) {
      result.removed_site_ids.push_back(coverage.site_ids[j]);
      continue;
    }
    const auto idx = static_cast<std::int32_t>(result.coverage.facility_sets.size());
    result.coverage.facility_sets.push_back(coverage.facility_sets[j]);
    result.coverage.site_ids.push_back(coverage.site_ids[j]);
    coverage.facility_sets[j].for_each_set_bit(
        [&](std::size_t i) { result.coverage.demand_neighbors[i].push_back(idx); });
  }
  std::sort(result.removed_site_ids.begin(), result.removed_site_ids.end());
  return result;
}

}  // namespace mclp
