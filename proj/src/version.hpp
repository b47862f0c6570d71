#pragma once

namespace qx {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qx
