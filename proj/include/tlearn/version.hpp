#pragma once

namespace tlearn {
inline constexpr const char* kVersion = "0.1.0";
}
