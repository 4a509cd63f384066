#pragma once

namespace mclp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mclp
