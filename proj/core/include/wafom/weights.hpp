#pragma once

#include <cstdint>
#include <map>

#include "wafom/f2.hpp"

namespace wafom {

/// Dick weight: mu(X) = sum over set entries (i, j) of j, taken in Z.
/// 0 <= mu(X) <= s*n*(n+1)/2, with mu(X) = 0 iff X = O.
long long dick_weight(const F2Matrix& x);

/// Largest Dick weight any s x n matrix can have: s*n*(n+1)/2.
long long max_dick_weight(int rows, int cols);

/// Gray-code element stream that carries the Dick weight along, updating
/// it per step from the toggled cells of the flipped basis vector.
class WeightedGrayEnumerator {
  public:
    explicit WeightedGrayEnumerator(const Subspace& space, int cap = kDefaultEnumCap);

    const F2Matrix& current() const { return gray_.current(); }
    long long weight() const { return weight_; }
    std::uint64_t index() const { return gray_.index(); }
    std::uint64_t size() const { return gray_.size(); }

    bool advance();

  private:
    GrayEnumerator gray_;
    long long weight_ = 0;
};

/// Smallest Dick weight among the nonzero elements of D, by full Gray
/// enumeration with early exit at 1. D must have dim >= 1: for the zero
/// dual (P the full space) the minimum is undefined.
long long min_weight(const Subspace& d, int cap = kDefaultEnumCap);

/// Histogram of Dick weights over all elements of an enumerated subspace.
struct WeightDistribution {
    int rows = 0;
    int cols = 0;
    std::map<long long, std::uint64_t> counts;
};

WeightDistribution weight_distribution(const Subspace& d, int cap = kDefaultEnumCap);

}  // namespace wafom
