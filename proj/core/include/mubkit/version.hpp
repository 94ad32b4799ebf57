#pragma once

namespace mubkit {
inline constexpr const char* kVersion = "0.1.0";
}
