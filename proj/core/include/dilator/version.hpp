#pragma once

namespace dilator {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace dilator
