#pragma once

namespace ap3 {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace ap3
