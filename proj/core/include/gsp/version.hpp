#pragma once

namespace gsp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gsp
