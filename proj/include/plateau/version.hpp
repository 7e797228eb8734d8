#pragma once

#define PLATEAU_VERSION "0.1.0"

namespace plateau {
inline constexpr const char* kVersion = PLATEAU_VERSION;
}
