#pragma once

namespace sumlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sumlab
