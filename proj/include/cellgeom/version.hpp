#pragma once

namespace cellgeom {
inline constexpr const char* kVersion = "0.1.0";
}
