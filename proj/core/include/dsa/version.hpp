#pragma once

#include <string_view>

namespace dsa {

inline constexpr std::string_view kToolName = "dsa-sim";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace dsa
