#pragma once

namespace srkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace srkit
