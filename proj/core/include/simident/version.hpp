#pragma once

namespace simident {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace simident
