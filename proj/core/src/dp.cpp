#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

#include "mclp/errors.hpp"
#include "mclp/solver.hpp"

namespace mclp {

void SolverConfig::validate() const {
  if (state_limit == 0) throw ConfigError("state_limit: must be >= 1");
  if (time_limit_seconds && !(*time_limit_seconds > 0.0))
    throw ConfigError("time_limit_seconds: must be positive");
}

namespace {

using Clock = std::chrono::steady_clock;

struct TraceNode {
  std::int32_t parent;    // index of the previous node, -1 = root
  std::int32_t facility;  // coverage-structure facility index taken
};

std::vector<std::int32_t> backtrack(const std::vector<TraceNode>& arena,
                                    std::int32_t trace,
                                    const CoverageStructure& coverage) {
  std::vector<std::int32_t> ids;
  for (std::int32_t t = trace; t >= 0; t = arena[t].parent)
    ids.push_back(coverage.site_ids[arena[t].facility]);
  std::sort(ids.begin(), ids.end());
  return ids;
}

/// Sum of the `t` largest standalone facility values among the facilities
/// that are still unprocessed at each position. suffix_sums[k][t] covers
/// order positions k+1..m-1; t is clamped to what is available.
std::vector<std::vector<double>> suffix_top_sums(const std::vector<double>& standalone,
                                                 const std::vector<std::size_t>& order,
                                                 std::size_t p) {
  const std::size_t m = order.size();
  std::vector<std::vector<double>> sums(m);
  std::vector<double> top;  // descending, at most p entries
  for (std::size_t k = m; k-- > 0;) {
    sums[k].resize(top.size() + 1);
    sums[k][0] = 0.0;
    for (std::size_t t = 0; t < top.size(); ++t) sums[k][t + 1] = sums[k][t] + top[t];
    const double v = standalone[order[k]];
    top.insert(std::upper_bound(top.begin(), top.end(), v, std::greater<>()), v);
    if (top.size() > p) top.pop_back();
  }
  return sums;
}

}  // namespace

std::pair<Solution, SolveStats> dp_solve(const Instance& instance,
                                         const CoverageStructure& coverage,
                                         const SolverConfig& config) {
  config.validate();
  const auto start = Clock::now();
  const std::size_t n = instance.num_demand_points();
  if (n > kMaxDemandPoints)
    throw CapExceededError("instance has " + std::to_string(n) +
                           " demand points; coverage masks support at most " +
                           std::to_string(kMaxDemandPoints));

  const std::size_t m = coverage.num_facilities();
  const std::size_t p = std::min<std::size_t>(static_cast<std::size_t>(instance.budget), m);
  SolveStats stats;

  // Greedy incumbent: a feasible lower bound for pruning and the fallback
  // answer if bounding empties the frontier.
  Solution incumbent;
  bool have_incumbent = false;
  if (config.enable_greedy_bound) {
    incumbent = greedy_solve(instance, coverage).first;
    have_incumbent = true;
  }

  std::vector<double> standalone(m);
  for (std::size_t j = 0; j < m; ++j)
    standalone[j] = coverage_value(coverage.facility_sets[j], instance);

  std::vector<std::size_t> order(m);
  for (std::size_t j = 0; j < m; ++j) order[j] = j;
  if (config.enable_facility_ordering) {
    // Heaviest standalone set first; stable, so ties stay in ascending
    // original-id order.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return standalone[a] > standalone[b];
    });
  }

  const auto suffix_sums =
      config.enable_greedy_bound ? suffix_top_sums(standalone, order, p)
                                 : std::vector<std::vector<double>>{};

  std::vector<TraceNode> arena;
  std::vector<std::vector<FrontierState>> layers(p + 1);
  layers[0].push_back(FrontierState{Bitset(n), 0.0, 0, -1});

  FrontierState best_seen = layers[0][0];  // survives beam truncation
  double incumbent_value = have_incumbent ? incumbent.objective : 0.0;
  bool truncated = false;  // sticky: exactness is lost once a cap bites

  for (std::size_t k = 0; k < m; ++k) {
    if (config.time_limit_seconds &&
        std::chrono::duration<double>(Clock::now() - start).count() >
            *config.time_limit_seconds) {
      truncated = true;
      break;
    }

    const std::size_t j = order[k];
    const Bitset& sj = coverage.facility_sets[j];

    // Take transitions, highest count first so each facility is taken at
    // most once per path; the skip transition is the states staying put.
    for (std::size_t f = p; f >= 1; --f) {
      const std::size_t parents = layers[f - 1].size();
      for (std::size_t s = 0; s < parents; ++s) {
        const FrontierState& parent = layers[f - 1][s];
        if (sj.is_subset_of(parent.mask)) continue;  // zero gain never helps

        Bitset mask = parent.mask | sj;
        const double value = coverage_value(mask, instance);
        ++stats.states_expanded;

        if (config.enable_greedy_bound) {
          // Optimistic completion: the best (p - f) standalone values still
          // unprocessed, overlap ignored. The slack keeps float rounding in
          // the bound from ever pruning a state that could still win.
          const auto& tops = suffix_sums[k];
          const std::size_t t = std::min(p - f, tops.size() - 1);
          const double optimistic = value + tops[t];
          const double slack = 1e-9 * (1.0 + std::abs(incumbent_value));
          if (optimistic <= incumbent_value - slack) {
            ++stats.bound_prunes;
            continue;
          }
        }

        const auto node = static_cast<std::int32_t>(arena.size());
        arena.push_back(TraceNode{parent.trace, static_cast<std::int32_t>(j)});
        FrontierState state{std::move(mask), value, static_cast<std::int32_t>(f), node};
        if (state.value > best_seen.value) best_seen = state;
        if (state.value > incumbent_value) incumbent_value = state.value;
        layers[f].push_back(std::move(state));
      }
    }

    // Symmetry merge: identical masks within a count layer collapse to the
    // first-created state.
    if (config.enable_symmetry_merge && !config.enable_dominance_pruning) {
      for (std::size_t f = 1; f <= p; ++f) {
        auto& layer = layers[f];
        std::unordered_set<std::uint64_t> seen;
        std::vector<FrontierState> kept;
        kept.reserve(layer.size());
        for (auto& state : layer) {
          bool duplicate = false;
          if (seen.count(state.mask.hash())) {
            for (const auto& other : kept) {
              if (other.mask == state.mask) {
                duplicate = true;
                break;
              }
            }
          }
          if (duplicate) {
            ++stats.states_pruned_dominance;
          } else {
            seen.insert(state.mask.hash());
            kept.push_back(std::move(state));
          }
        }
        layer = std::move(kept);
      }
    }

    // Dominance: a state dies when some state at this facility layer covers
    // at least its mask using no more facilities. Subsumes symmetry merging.
    if (config.enable_dominance_pruning) {
      std::vector<const FrontierState*> lower;  // survivors with smaller count
      for (std::size_t f = 0; f <= p; ++f) {
        auto& layer = layers[f];
        // Value-descending scan: a dominator always weighs at least as much
        // as the dominated mask, so candidates earlier in the order are the
        // only ones to check.
        std::stable_sort(layer.begin(), layer.end(),
                         [](const FrontierState& a, const FrontierState& b) {
                           return a.value > b.value;
                         });
        std::vector<FrontierState> kept;
        kept.reserve(layer.size());
        for (auto& state : layer) {
          bool dominated = false;
          for (const FrontierState* d : lower) {
            if (d->value < state.value) break;
            if (state.mask.is_subset_of(d->mask)) {
              dominated = true;
              break;
            }
          }
          if (!dominated) {
            for (const auto& other : kept) {
              if (other.value < state.value) break;
              if (state.mask.is_subset_of(other.mask)) {
                dominated = true;
                break;
              }
            }
          }
          if (dominated) {
            ++stats.states_pruned_dominance;
          } else {
            kept.push_back(std::move(state));
          }
        }
        layer = std::move(kept);
        for (const auto& state : layer) lower.push_back(&state);
        std::stable_sort(lower.begin(), lower.end(),
                         [](const FrontierState* a, const FrontierState* b) {
                           return a->value > b->value;
                         });
      }
    }

    // Beam truncation: past the state cap, keep the highest-value states and
    // give up on the exactness guarantee.
    std::size_t total = 0;
    for (const auto& layer : layers) total += layer.size();
    if (total > config.state_limit) {
      struct Ref {
        double value;
        std::size_t layer;
        std::size_t pos;
      };
      std::vector<Ref> refs;
      refs.reserve(total);
      for (std::size_t f = 0; f <= p; ++f)
        for (std::size_t s = 0; s < layers[f].size(); ++s)
          refs.push_back(Ref{layers[f][s].value, f, s});
      std::sort(refs.begin(), refs.end(), [](const Ref& a, const Ref& b) {
        if (a.value != b.value) return a.value > b.value;
        if (a.layer != b.layer) return a.layer < b.layer;
        return a.pos < b.pos;
      });
      refs.resize(config.state_limit);
      std::vector<std::vector<bool>> keep(p + 1);
      for (std::size_t f = 0; f <= p; ++f) keep[f].assign(layers[f].size(), false);
      for (const Ref& r : refs) keep[r.layer][r.pos] = true;
      for (std::size_t f = 0; f <= p; ++f) {
        std::vector<FrontierState> kept;
        for (std::size_t s = 0; s < layers[f].size(); ++s)
          if (keep[f][s]) kept.push_back(std::move(layers[f][s]));
        layers[f] = std::move(kept);
      }
      truncated = true;  // beam search continues, but the result is unproven
    }
  }

  // Best surviving state; best_seen covers anything truncation dropped.
  double best_value = best_seen.value;
  for (const auto& layer : layers)
    for (const auto& state : layer)
      if (state.value > best_value) best_value = state.value;

  std::vector<std::int32_t> chosen;
  bool have_chosen = false;
  auto offer = [&](const FrontierState& state) {
    if (state.value != best_value) return;
    auto ids = backtrack(arena, state.trace, coverage);
    if (!have_chosen ||
        std::lexicographical_compare(ids.begin(), ids.end(), chosen.begin(), chosen.end())) {
      chosen = std::move(ids);
      have_chosen = true;
    }
  };
  offer(best_seen);
  for (const auto& layer : layers)
    for (const auto& state : layer) offer(state);

  // With aggressive bounding the frontier can end below the greedy
  // incumbent; the incumbent is then the proven answer.
  if (have_incumbent && incumbent.objective > best_value) {
    chosen = incumbent.selected;
  }

  if (instance.budget_mode == BudgetMode::Exactly) {
    std::vector<bool> taken(instance.num_sites(), false);
    for (std::int32_t id : chosen) taken[static_cast<std::size_t>(id)] = true;
    for (std::int32_t id = 0;
         chosen.size() < static_cast<std::size_t>(instance.budget) &&
         id < static_cast<std::int32_t>(instance.num_sites());
         ++id) {
      if (!taken[id]) chosen.push_back(id);
    }
  }

  Solution sol = make_solution(std::move(chosen), instance, coverage, "dp");
  stats.exact = !truncated;
  stats.wall_time = Clock::now() - start;
  return {std::move(sol), stats};
}

const char* to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::Dp:
      return "dp";
    case SolverKind::Greedy:
      return "greedy";
    case SolverKind::Brute:
      return "brute";
  }
  return "unknown";
}

std::pair<Solution, SolveStats> solve(const Instance& instance, SolverKind kind,
                                      const SolverConfig& config, bool use_preprocess) {
  instance.validate();
  const CoverageStructure raw = build_coverage(instance);
  const CoverageStructure* active = &raw;

  PreprocessResult pre;
  SolveStats stats;
  if (use_preprocess) {
    pre = preprocess(raw);
    stats.facilities_removed_preprocess = pre.removed_site_ids.size();
    active = &pre.coverage;
  }

  Solution sol;
  switch (kind) {
    case SolverKind::Dp: {
      auto [s, st] = dp_solve(instance, *active, config);
      sol = std::move(s);
      st.facilities_removed_preprocess = stats.facilities_removed_preprocess;
      stats = st;
      break;
    }
    case SolverKind::Greedy: {
      auto [s, st] = greedy_solve(instance, *active);
      sol = std::move(s);
      st.facilities_removed_preprocess = stats.facilities_removed_preprocess;
      stats = st;
      break;
    }
    case SolverKind::Brute: {
      const auto t0 = Clock::now();
      sol = brute_force_solve(instance, *active);
      stats.wall_time = Clock::now() - t0;
      break;
    }
  }

  // Canonicalize against the raw coverage: selections coming out of a
  // reduced structure must still report the exact union and objective of
  // the original instance.
  std::string name = sol.solver_name;
  Solution canonical = make_solution(std::move(sol.selected), instance, raw, std::move(name));
  return {std::move(canonical), stats};
}

}  // namespace mclp
