#pragma once

#include <stdexcept>
#include <string>

namespace hdmock {

// Raised when a mathematical precondition fails or a computation cannot be
// carried out at the requested precision. Command-line front ends map this
// to a "domain error" exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hdmock
