#pragma once

namespace camoforge {

inline constexpr const char* kToolName = "camoforge";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace camoforge
