#pragma once

#include <charconv>
#include <string>

namespace wafom {

/// Deterministic shortest round-trip decimal for a double; infinities and
/// NaN come out as "inf"/"-inf"/"nan".
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace wafom
