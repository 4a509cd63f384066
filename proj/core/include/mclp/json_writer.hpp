#pragma once

#include <cstdint>
#include <string>

namespace mclp {

/// Canonical number formatting for every JSON artifact the tool writes.
/// Keys are always emitted in sorted order and floats in a fixed format, so
/// identical inputs serialize to identical bytes on every platform.

/// 12 significant digits; the canonical form for coordinates, radii and
/// weights.
std::string format_double(double v);

/// 17 significant digits (lossless round trip); used for objectives.
std::string format_double_full(double v);

/// Fixed-point with one decimal; used for coverage percentages in solution
/// files.
std::string format_percent(double v);

/// Minimal string escaping for the JSON subset we emit.
std::string json_escape(const std::string& s);

}  // namespace mclp
