#pragma once

#include <string>

#include "mclp/coverage.hpp"
#include "mclp/solution.hpp"
#include "mclp/solver.hpp"

namespace mclp {

/// Canonical solution JSON: selected and covered ids sorted ascending, the
/// objective at full (17-digit) precision, the coverage percentage at one
/// decimal, plus the solver's counters. Wall-clock time is deliberately not
/// serialized; it would make otherwise identical runs produce different
/// bytes, and solution files are compared byte-for-byte.
std::string serialize_solution(const Solution& solution, const SolveStats& stats,
                               const CoverageStructure& coverage);

struct ParsedSolution {
  Solution solution;
  double coverage_percent = 0.0;
  bool exact = true;
};

/// Parses a solution file back for validation. The covered mask needs the
/// demand count, hence the instance argument. Error taxonomy matches
/// parse_instance.
ParsedSolution parse_solution(const std::string& bytes, const Instance& instance);

}  // namespace mclp
