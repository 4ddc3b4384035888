#pragma once

namespace entprime {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace entprime
