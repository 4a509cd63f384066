#pragma once

#include <cstdint>
#include <vector>

#include "mclp/bitset.hpp"
#include "mclp/instance.hpp"

namespace mclp {

/// Service is binary: a facility covers a demand point iff their distance is
/// at most radius + kDistanceEpsilon. The absolute epsilon makes boundary
/// placements (distance exactly equal to the radius) deterministic under
/// floating-point distance computation.
inline constexpr double kDistanceEpsilon = 1e-9;

/// Upper bound on the number of demand points a coverage mask can index.
/// Masks are multiword, so this is a memory guard, not a 64-bit limit.
inline constexpr std::size_t kMaxDemandPoints = 4096;

/// Precomputed coverage geometry for one instance: per-facility demand
/// bitsets, per-demand neighbor lists, and the total demand weight.
///
/// `site_ids` maps facility index -> original site id. build_coverage sets
/// the identity mapping; preprocess() produces structures where surviving
/// facilities keep their original ids here.
struct CoverageStructure {
  std::vector<Bitset> facility_sets;                    // indexed by facility
  std::vector<std::vector<std::int32_t>> demand_neighbors;  // indexed by demand
  std::vector<std::int32_t> site_ids;                   // facility -> site id
  double total_weight = 0.0;

  std::size_t num_facilities() const { return facility_sets.size(); }
};

/// Computes the coverage structure for an instance.
/// Throws CapExceededError if the instance has more than kMaxDemandPoints
/// demand points.
CoverageStructure build_coverage(const Instance& instance);

/// Sum of the weights of the demand points set in `mask`, accumulated in
/// ascending id order. Every objective in the library is computed through
/// this function so equal masks always produce bit-identical values.
double coverage_value(const Bitset& mask, const Instance& instance);

}  // namespace mclp
