#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mclp/bitset.hpp"
#include "mclp/coverage.hpp"
#include "mclp/instance.hpp"

namespace mclp {

/// A facility selection together with its induced coverage. `covered_mask`
/// is always the saturated coverage (exact union of the selected facility
/// sets) and `objective` the weight of that mask.
struct Solution {
  std::vector<std::int32_t> selected;  // sorted original site ids
  Bitset covered_mask;
  double objective = 0.0;
  std::string solver_name;
};

/// Builds a canonical Solution from a selected id set: sorts the ids,
/// recomputes the covered mask as the exact union over `coverage`, and
/// recomputes the objective from scratch.
Solution make_solution(std::vector<std::int32_t> selected, const Instance& instance,
                       const CoverageStructure& coverage, std::string solver_name);

/// Outcome of checking a Solution against an instance. Feasible and
/// internally consistent iff `violations` is empty.
struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks budget feasibility, id sanity, exact covered-mask/union agreement
/// (no over-claim, no under-claim) and objective/mask agreement. Never
/// throws; every violated constraint is reported.
ValidationReport validate_solution(const Solution& solution, const Instance& instance,
                                   const CoverageStructure& coverage);

}  // namespace mclp
