#pragma once

namespace rakun {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace rakun
