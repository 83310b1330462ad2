#pragma once

#include <string_view>

namespace skoslint {

inline constexpr std::string_view kToolName = "skoslint";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace skoslint
