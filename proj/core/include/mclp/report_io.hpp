#pragma once

#include <string>

#include "mclp/analysis.hpp"

namespace mclp {

/// CSV with one header row and fixed column order:
///   <parameter_name>,coverage_percent,facilities_used,<derived>,status
/// where <derived> is "efficiency" for radius sweeps and "marginal_percent"
/// for budget sweeps. Percentages and derived metrics are fixed-point with
/// two decimals; absent derived cells are empty.
std::string sweep_to_csv(const SweepReport& report);

/// JSON mirror of the SweepReport fields (absent metrics become null).
std::string sweep_to_json(const SweepReport& report);

/// CSV columns:
///   instance,n,m,p,dp_coverage_percent,greedy_coverage_percent,
///   improvement_percent,dp_exact
/// followed by one aggregate row per populated size class whose instance
/// label is mean_<class> and whose n/m/p cells are empty.
std::string comparison_to_csv(const ComparisonReport& report);

std::string comparison_to_json(const ComparisonReport& report);

}  // namespace mclp
