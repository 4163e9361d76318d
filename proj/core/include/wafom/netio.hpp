#pragma once

#include <iosfwd>
#include <string>

#include "wafom/f2.hpp"

namespace wafom {

/// Net file format, LF line endings throughout:
///   line 1: "s n m" (single spaces)
///   then m generator blocks separated by exactly one blank line, each
///   block s lines of n characters from {0,1} (row i, digit j order).
/// Writing emits the canonical basis, so equal subspaces serialize
/// byte-identically. Reading accepts any generator list (it canonicalizes,
/// so the resulting dimension may be less than the header m).
std::string net_to_string(const Subspace& p);
void write_net(std::ostream& os, const Subspace& p);
void write_net_file(const std::string& path, const Subspace& p);

/// Throws NetParseError on any deviation from the format.
Subspace read_net(std::istream& is);
Subspace read_net_string(const std::string& text);
Subspace read_net_file(const std::string& path);

}  // namespace wafom
