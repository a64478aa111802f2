#pragma once

namespace ilm {

inline constexpr const char* kToolName = "ilm";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace ilm
