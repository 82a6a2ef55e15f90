#pragma once

namespace sectorlab {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace sectorlab
