#pragma once

namespace marp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace marp
