#pragma once

namespace biproj {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace biproj
