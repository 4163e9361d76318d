#pragma once

#include <stdexcept>
#include <string>

namespace wafom {

/// Thrown when an enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown on malformed net files (bad header, bad rows, bad separators).
class NetParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace wafom
