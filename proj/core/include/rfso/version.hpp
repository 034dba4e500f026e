#pragma once

namespace rfso {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rfso
