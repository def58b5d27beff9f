#pragma once

namespace eulertop {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace eulertop
