#pragma once

namespace ssli {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ssli
