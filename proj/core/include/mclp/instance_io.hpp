#pragma once

#include <string>

#include "mclp/instance.hpp"

namespace mclp {

/// Parses an instance from its JSON form:
///
///   {
///     "budget": 3,
///     "budget_mode": "at_most" | "exactly",
///     "demand_points": [{"weight": 1.0, "x": 0.0, "y": 0.0}, ...],
///     "radius": 10.0,
///     "sites": [{"x": 1.0, "y": 2.0}, ...]
///   }
///
/// Ids are implicit array positions (0-based). Throws ParseError on
/// malformed JSON, SchemaError on missing keys / wrong types / non-finite
/// numbers, and InvariantError on model violations (negative weight, budget
/// outside [1, m]), each naming the offending key.
Instance parse_instance(const std::string& bytes);

/// Canonical serialization: sorted keys, 12-significant-digit floats,
/// trailing newline. serialize(parse(f)) is byte-identical for canonical f,
/// and serialize-parse-serialize is a fixed point for any valid file.
std::string serialize_instance(const Instance& instance);

}  // namespace mclp
