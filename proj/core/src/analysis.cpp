#include "mclp/analysis.hpp"

#include <algorithm>
#include <unordered_map>

#include "mclp/errors.hpp"

namespace mclp {

double efficiency(double coverage_percent, std::int32_t facilities_used) {
  // No facility in use only happens when nothing is coverable; report 0
  // rather than dividing by zero.
  if (facilities_used < 1) return 0.0;
  return coverage_percent / static_cast<double>(facilities_used);
}

std::vector<std::optional<double>> marginal_column(const std::vector<double>& coverages) {
  std::vector<std::optional<double>> out(coverages.size());
  for (std::size_t k = 1; k < coverages.size(); ++k)
    out[k] = coverages[k] - coverages[k - 1];
  return out;
}

double coverage_percent(double objective, const CoverageStructure& coverage) {
  if (coverage.total_weight <= 0.0) return 0.0;
  return 100.0 * objective / coverage.total_weight;
}

std::int32_t contributing_facilities(const Solution& solution, const Instance& instance,
                                     const CoverageStructure& coverage) {
  std::unordered_map<std::int32_t, std::size_t> index_of;
  for (std::size_t f = 0; f < coverage.site_ids.size(); ++f)
    index_of.emplace(coverage.site_ids[f], f);

  std::vector<std::size_t> members;
  for (std::int32_t id : solution.selected) {
    auto it = index_of.find(id);
    if (it != index_of.end()) members.push_back(it->second);
  }

  // Greedy replay within the selection: re-add the facility with the largest
  // remaining gain (ties to the lower id) until nothing gains. The count is
  // how many of the selected facilities do actual covering work; padded and
  // redundant picks contribute nothing and stop the replay.
  Bitset mask(instance.num_demand_points());
  std::vector<bool> used(members.size(), false);
  std::int32_t count = 0;
  for (;;) {
    double best_gain = 0.0;
    std::size_t best = members.size();
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (used[k]) continue;
      const double gain = marginal_benefit(static_cast<std::int32_t>(members[k]), mask,
                                           coverage, instance);
      if (gain > best_gain) {
        best_gain = gain;
        best = k;
      }
    }
    if (best == members.size()) break;
    used[best] = true;
    mask |= coverage.facility_sets[members[best]];
    ++count;
  }
  return count;
}

namespace {

SweepRow solve_row(const Instance& instance, double parameter_value, SolverKind solver,
                   const SolverConfig& config, bool use_preprocess) {
  SweepRow row;
  row.parameter_value = parameter_value;
  try {
    const auto [sol, stats] = solve(instance, solver, config, use_preprocess);
    const CoverageStructure cov = build_coverage(instance);
    row.coverage_percent = coverage_percent(sol.objective, cov);
    row.facilities_used = contributing_facilities(sol, instance, cov);
  } catch (const Error& e) {
    row.ok = false;
    row.error = e.what();
  }
  return row;
}

}  // namespace

SweepReport radius_sweep(const Instance& instance, const std::vector<double>& radii,
                         SolverKind solver, const SolverConfig& config,
                         bool use_preprocess) {
  for (std::size_t k = 0; k + 1 < radii.size(); ++k)
    if (!(radii[k] < radii[k + 1]))
      throw ConfigError("radii: values must be strictly ascending");
  for (double r : radii)
    if (!(r > 0.0)) throw ConfigError("radii: values must be positive");

  SweepReport report;
  report.parameter_name = "radius";
  report.solver_name = to_string(solver);
  for (double r : radii) {
    SweepRow row = solve_row(instance.with_radius(r), r, solver, config, use_preprocess);
    if (row.ok) row.derived_metric = efficiency(row.coverage_percent, row.facilities_used);
    report.rows.push_back(std::move(row));
  }
  return report;
}

SweepReport budget_sweep(const Instance& instance, const std::vector<std::int32_t>& budgets,
                         SolverKind solver, const SolverConfig& config,
                         bool use_preprocess) {
  for (std::size_t k = 0; k + 1 < budgets.size(); ++k)
    if (!(budgets[k] < budgets[k + 1]))
      throw ConfigError("budgets: values must be strictly ascending");
  for (std::int32_t b : budgets)
    if (b < 1 || static_cast<std::size_t>(b) > instance.num_sites())
      throw ConfigError("budgets: values must be in [1, m]");

  SweepReport report;
  report.parameter_name = "budget";
  report.solver_name = to_string(solver);
  const SweepRow* prev = nullptr;
  for (std::int32_t b : budgets) {
    SweepRow row = solve_row(instance.with_budget(b), static_cast<double>(b), solver,
                             config, use_preprocess);
    if (row.ok && prev != nullptr && prev->ok)
      row.derived_metric = row.coverage_percent - prev->coverage_percent;
    report.rows.push_back(std::move(row));
    prev = &report.rows.back();
  }
  return report;
}

ComparisonReport compare_solvers(const std::vector<LabeledInstance>& instances,
                                 const SolverConfig& config, bool use_preprocess) {
  ComparisonReport report;
  report.rows.reserve(instances.size());
  for (const auto& [label, instance] : instances) {
    ComparisonRow row;
    row.instance_label = label;
    row.n = static_cast<std::int32_t>(instance.num_demand_points());
    row.m = static_cast<std::int32_t>(instance.num_sites());
    row.p = instance.budget;
    const auto [dp_sol, dp_stats] = solve(instance, SolverKind::Dp, config, use_preprocess);
    const auto [gr_sol, gr_stats] =
        solve(instance, SolverKind::Greedy, config, use_preprocess);
    const CoverageStructure cov = build_coverage(instance);
    row.dp_coverage_percent = coverage_percent(dp_sol.objective, cov);
    row.greedy_coverage_percent = coverage_percent(gr_sol.objective, cov);
    row.improvement_percent = row.dp_coverage_percent - row.greedy_coverage_percent;
    row.dp_exact = dp_stats.exact;
    report.rows.push_back(std::move(row));
  }

  const char* classes[3] = {"small", "medium", "large"};
  for (int c = 0; c < 3; ++c) {
    ComparisonAggregate agg;
    agg.size_class = classes[c];
    for (const ComparisonRow& row : report.rows) {
      const int klass = row.n <= kSmallMaxDemand ? 0 : row.n <= kMediumMaxDemand ? 1 : 2;
      if (klass != c) continue;
      ++agg.instances;
      agg.mean_dp_coverage_percent += row.dp_coverage_percent;
      agg.mean_greedy_coverage_percent += row.greedy_coverage_percent;
      agg.mean_improvement_percent += row.improvement_percent;
    }
    if (agg.instances == 0) continue;
    agg.mean_dp_coverage_percent /= agg.instances;
    agg.mean_greedy_coverage_percent /= agg.instances;
    agg.mean_improvement_percent /= agg.instances;
    report.aggregates.push_back(std::move(agg));
  }
  return report;
}

}  // namespace mclp
