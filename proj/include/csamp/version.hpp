#pragma once

namespace csamp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace csamp
