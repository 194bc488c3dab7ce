#pragma once

namespace tlfnoise {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tlfnoise
