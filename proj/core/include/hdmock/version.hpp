#pragma once

namespace hdmock {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hdmock
