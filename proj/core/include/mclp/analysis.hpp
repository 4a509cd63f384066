#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mclp/coverage.hpp"
#include "mclp/instance.hpp"
#include "mclp/solver.hpp"

namespace mclp {

/// One row of a sensitivity sweep. `derived_metric` is efficiency for radius
/// sweeps and the marginal coverage gain for budget sweeps; it is absent for
/// the first budget row and for failed rows.
struct SweepRow {
  double parameter_value = 0.0;
  double coverage_percent = 0.0;  // in [0, 100]
  std::int32_t facilities_used = 0;
  std::optional<double> derived_metric;
  bool ok = true;
  std::string error;  // set when !ok
};

struct SweepReport {
  std::string parameter_name;  // "radius" | "budget"
  std::string solver_name;
  std::vector<SweepRow> rows;  // ascending by parameter_value
};

struct ComparisonRow {
  std::string instance_label;
  std::int32_t n = 0;
  std::int32_t m = 0;
  std::int32_t p = 0;
  double dp_coverage_percent = 0.0;
  double greedy_coverage_percent = 0.0;
  double improvement_percent = 0.0;  // dp - greedy
  bool dp_exact = true;
};

/// Size classes aggregate by demand-point count; thresholds are part of the
/// CLI contract: Small n <= 20, Medium 21..50, Large > 50.
inline constexpr std::int32_t kSmallMaxDemand = 20;
inline constexpr std::int32_t kMediumMaxDemand = 50;

struct ComparisonAggregate {
  std::string size_class;  // "small" | "medium" | "large"
  std::int32_t instances = 0;
  double mean_dp_coverage_percent = 0.0;
  double mean_greedy_coverage_percent = 0.0;
  double mean_improvement_percent = 0.0;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  std::vector<ComparisonAggregate> aggregates;  // small, medium, large order
};

/// Coverage percentage per facility actually used.
double efficiency(double coverage_percent, std::int32_t facilities_used);

/// Successive differences of a coverage column; the first entry has no
/// predecessor and is absent.
std::vector<std::optional<double>> marginal_column(const std::vector<double>& coverages);

/// Number of selected facilities with a positive marginal contribution,
/// counted by greedily replaying the selection (largest gain first, ties to
/// the lower id) until no facility adds coverage. Zero-gain picks (padding
/// in Exactly mode, redundant selections) do not count, so efficiency is
/// not diluted by them.
std::int32_t contributing_facilities(const Solution& solution, const Instance& instance,
                                     const CoverageStructure& coverage);

/// 100 * objective / total demand weight; 0 when the total weight is 0.
double coverage_percent(double objective, const CoverageStructure& coverage);

/// Re-solves the instance at each radius (same points, same budget) and
/// reports coverage, contributing facilities and efficiency per row. Solver
/// errors are recorded on the affected row, not thrown.
SweepReport radius_sweep(const Instance& instance, const std::vector<double>& radii,
                         SolverKind solver, const SolverConfig& config = {},
                         bool use_preprocess = false);

/// Re-solves the instance at each budget; derived_metric is the coverage
/// gain over the previous row.
SweepReport budget_sweep(const Instance& instance, const std::vector<std::int32_t>& budgets,
                         SolverKind solver, const SolverConfig& config = {},
                         bool use_preprocess = false);

struct LabeledInstance {
  std::string label;
  Instance instance;
};

/// Runs the exact solver and the greedy heuristic on every instance and
/// tabulates coverage percentages, improvements, and per-size-class means.
ComparisonReport compare_solvers(const std::vector<LabeledInstance>& instances,
                                 const SolverConfig& config = {},
                                 bool use_preprocess = false);

}  // namespace mclp
