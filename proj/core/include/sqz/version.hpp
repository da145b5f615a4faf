#pragma once

namespace sqz {
inline constexpr const char* version = "0.1.0";
}
