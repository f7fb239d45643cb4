#pragma once

namespace topogen {

inline constexpr const char* version = "1.0.0";

} // namespace topogen
