#pragma once

namespace wallacs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wallacs
