#pragma once

namespace aniso {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace aniso
