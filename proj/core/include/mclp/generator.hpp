#pragma once

#include <cstdint>
#include <optional>

#include "mclp/instance.hpp"

namespace mclp {

enum class Distribution { Uniform, Clustered };

inline const char* to_string(Distribution d) {
  return d == Distribution::Uniform ? "uniform" : "clustered";
}

/// Parameters for synthetic instance generation. Exactly one of `budget`
/// and `budget_fraction` must be set; a fraction f maps to ceil(f * m).
struct GeneratorConfig {
  std::int32_t n = 10;                      // demand points
  std::int32_t m = 5;                       // candidate sites
  std::optional<std::int32_t> budget;       // absolute budget
  std::optional<double> budget_fraction;    // in (0, 1]
  BudgetMode budget_mode = BudgetMode::AtMost;
  double radius = 10.0;
  Distribution distribution = Distribution::Uniform;
  std::int32_t cluster_count = 3;           // Clustered only
  double cluster_spread = 5.0;              // Gaussian sigma, Clustered only
  double weight_low = 1.0;
  double weight_high = 10.0;
  double area = 100.0;                      // square side length
  std::uint64_t seed = 0;

  /// Budget derived from `budget` or `budget_fraction`, clamped to [1, m].
  std::int32_t derived_budget() const;

  /// Throws ConfigError if any field violates its invariant.
  void validate() const;
};

/// Generates a seeded synthetic instance. Pure function of the config:
/// identical configs (including seed) produce bit-identical instances.
///
/// Uniform: demand points and sites i.i.d. uniform on [0, area]^2.
/// Clustered: cluster centers uniform on the square; demand point i is
/// assigned to center i mod cluster_count (round-robin) and offset by
/// isotropic Gaussian noise with sigma cluster_spread, clamped to the
/// square. Sites are always uniform. Weights are uniform on
/// [weight_low, weight_high].
Instance generate(const GeneratorConfig& config);

}  // namespace mclp
