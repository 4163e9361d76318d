#pragma once

#include <optional>
#include <string>

#include "wafom/dyadic.hpp"
#include "wafom/f2.hpp"

namespace wafom {

enum class WafomMethod { dual_enum, point_sum, exact };

std::string to_string(WafomMethod m);

struct WafomValue {
    double value = 0.0;       // >= 0 (clamped against rounding noise)
    double log2_value = 0.0;  // -infinity when value == 0
    std::optional<DyadicRational> exact;  // set by the exact method only
    WafomMethod method = WafomMethod::dual_enum;
};

/// WAFOM via the dual code: sum of 2^-weight over nonzero dual vectors.
/// Enumerates 2^(s*n - dim P) vectors; throws CapExceeded past `cap`.
WafomValue wafom_dual(const Subspace& p, int cap = kDefaultEnumCap);

/// WAFOM via the point-set identity
///   -1 + 2^-m * sum_B prod_{i,j} (1 + (-1)^{B_ij} 2^-j),
/// computed in double-double arithmetic. Enumerates 2^(dim P) points.
WafomValue wafom_points(const Subspace& p, int cap = kDefaultEnumCap);

enum class ExactRoute { dual_enum, point_sum };

/// Exact WAFOM as a dyadic rational; both routes normalize to the same value.
DyadicRational wafom_exact(const Subspace& p, ExactRoute route,
                           int cap = kDefaultEnumCap);

/// Exact WAFOM via whichever route enumerates fewer vectors.
WafomValue wafom_exact_value(const Subspace& p, int cap = kDefaultEnumCap);

}  // namespace wafom
