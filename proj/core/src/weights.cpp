#include "wafom/weights.hpp"

#include <stdexcept>

namespace wafom {

long long dick_weight(const F2Matrix& x) {
    long long total = 0;
    int n = x.cols();
    x.for_each_set_bit([&](long long f) { total += f % n + 1; });
    return total;
}

long long max_dick_weight(int rows, int cols) {
    F2Matrix probe(rows, cols);  // validates shape and weight range
    (void)probe;
    return static_cast<long long>(rows) * cols * (cols + 1) / 2;
}

WeightedGrayEnumerator::WeightedGrayEnumerator(const Subspace& space, int cap)
    : gray_(space, cap) {}

bool WeightedGrayEnumerator::advance() {
    if (!gray_.advance()) {
        return false;
    }
    // The step XORed one basis vector in; its set cells are exactly the
    // toggled ones. A cell now set was turned on (+j), now clear off (-j).
    const F2Matrix& flipped = gray_.basis_vector(gray_.last_flipped());
    const F2Matrix& cur = gray_.current();
    int n = cur.cols();
    flipped.for_each_set_bit([&](long long f) {
        long long j = f % n + 1;
        weight_ += cur.at_flat(f) ? j : -j;
    });
    return true;
}

long long min_weight(const Subspace& d, int cap) {
    if (d.dim() < 1) {
        throw std::invalid_argument("min_weight: undefined for the zero subspace");
    }
    WeightedGrayEnumerator it(d, cap);
    long long best = -1;
    while (it.advance()) {
        long long w = it.weight();
        if (best < 0 || w < best) {
            best = w;
            if (best == 1) {
                break;
            }
        }
    }
    return best;
}

WeightDistribution weight_distribution(const Subspace& d, int cap) {
    WeightDistribution out;
    out.rows = d.rows();
    out.cols = d.cols();
    WeightedGrayEnumerator it(d, cap);
    out.counts[it.weight()] = 1;
    while (it.advance()) {
        ++out.counts[it.weight()];
    }
    return out;
}

}  // namespace wafom
