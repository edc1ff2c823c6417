#pragma once

namespace solvcert {

inline constexpr const char* kToolName = "solvcert";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace solvcert
