#pragma once

namespace decosolv {

inline constexpr const char* version = "0.1.0";

} // namespace decosolv
