#pragma once

namespace transit {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace transit
