#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mclp/bitset.hpp"
#include "mclp/coverage.hpp"
#include "mclp/instance.hpp"
#include "mclp/solution.hpp"

namespace mclp {

/// One search state of the exact solver: a coverage mask, the number of
/// facilities spent to reach it, its objective value, and a backtracking
/// handle into the solver's trace arena.
///
/// A knapsack-style table indexed by (facility, count) alone cannot drive
/// the recurrence: the gain of taking a facility depends on which demand
/// points are already covered, not on how many facilities were used. States
/// therefore carry the coverage mask itself, and the per-count frontier
/// keeps only nondominated masks.
struct FrontierState {
  Bitset mask;
  double value = 0.0;       // always == coverage_value(mask)
  std::int32_t count = 0;   // facilities used, in [0, budget]
  std::int32_t trace = -1;  // index into the trace arena, -1 = empty set
};

/// Per-technique switches for the exact solver. All default to on.
struct SolverConfig {
  bool enable_dominance_pruning = true;  // drop set-inclusion-dominated states
  bool enable_symmetry_merge = true;     // merge states with identical masks
  bool enable_greedy_bound = true;       // greedy incumbent + optimistic bound
  bool enable_facility_ordering = true;  // heaviest standalone set first
  std::size_t state_limit = 1'000'000;   // frontier cap; beam-truncate beyond
  std::optional<double> time_limit_seconds;  // wall-clock bound

  void validate() const;  // throws ConfigError if state_limit == 0
};

/// Counters reported by the solvers. `exact == true` guarantees the returned
/// objective is the true optimum; truncation by state_limit or time_limit
/// clears it (never a silently wrong answer).
struct SolveStats {
  std::uint64_t states_expanded = 0;
  std::uint64_t states_pruned_dominance = 0;
  std::uint64_t facilities_removed_preprocess = 0;
  std::uint64_t bound_prunes = 0;
  std::chrono::duration<double> wall_time{0.0};
  bool exact = true;
};

/// Weight of the demand newly covered by facility `j` on top of
/// `current_mask`: coverage_value(facility_sets[j] \ current_mask).
double marginal_benefit(std::int32_t j, const Bitset& current_mask,
                        const CoverageStructure& coverage, const Instance& instance);

/// Greedy heuristic: repeatedly picks the facility with the largest marginal
/// benefit, ties to the lower index. AtMost mode stops once no facility adds
/// coverage; Exactly mode keeps selecting lowest-index unused facilities
/// until the budget is reached. Deterministic given the instance.
std::pair<Solution, SolveStats> greedy_solve(const Instance& instance,
                                             const CoverageStructure& coverage);

/// Result of dominated-facility elimination. `coverage.site_ids` records,
/// for each surviving facility, its original site id.
struct PreprocessResult {
  CoverageStructure coverage;
  std::vector<std::int32_t> removed_site_ids;  // sorted
};

/// Removes facility j when some other facility covers a strict superset of
/// its demand, and merges identical coverage sets down to the lowest-index
/// representative. The optimal objective value is unchanged.
PreprocessResult preprocess(const CoverageStructure& coverage);

/// Exact solver: processes facilities one at a time, maintaining per-count
/// frontiers of nondominated coverage states; each facility induces
/// skip/take transitions, and only the previous facility layer is retained.
/// A state is dominated when another state at the same facility layer covers
/// a superset of its demand with no more facilities.
///
/// Throws CapExceededError when the instance has more demand points than its
/// masks support (kMaxDemandPoints). When state_limit or time_limit truncate
/// the search, the best state found is returned with stats.exact = false.
std::pair<Solution, SolveStats> dp_solve(const Instance& instance,
                                         const CoverageStructure& coverage,
                                         const SolverConfig& config = {});

/// Exhaustive-enumeration cap for brute_force_solve, in enumerated subsets.
inline constexpr std::uint64_t kBruteForceSubsetCap = 10'000'000;

/// Enumerates every facility subset of size <= p (AtMost) or == p (Exactly)
/// and returns the maximum-objective subset, ties broken by the
/// lexicographically smallest sorted id list. The independent ground truth
/// for the other solvers on small instances.
///
/// Throws CapExceededError when the subset count exceeds kBruteForceSubsetCap.
Solution brute_force_solve(const Instance& instance, const CoverageStructure& coverage);

enum class SolverKind { Dp, Greedy, Brute };

const char* to_string(SolverKind kind);

/// Convenience pipeline: builds coverage, optionally preprocesses, runs the
/// requested solver, and canonicalizes the result against the raw coverage
/// so the returned Solution always satisfies validate_solution.
std::pair<Solution, SolveStats> solve(const Instance& instance, SolverKind kind,
                                      const SolverConfig& config = {},
                                      bool use_preprocess = false);

}  // namespace mclp
