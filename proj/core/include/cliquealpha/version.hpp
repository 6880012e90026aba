#pragma once

namespace cliquealpha {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cliquealpha
