#pragma once

namespace gridcycles {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gridcycles
