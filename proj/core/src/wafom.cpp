#include "wafom/wafom.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "compensated.hpp"
#include "wafom/weights.hpp"

namespace wafom {

namespace {

double pow2_of(long long e) {
    if (e < -1100) return 0.0;
    if (e > 1023) return std::numeric_limits<double>::infinity();
    return std::ldexp(1.0, static_cast<int>(e));
}

WafomValue finish(double v, WafomMethod method) {
    WafomValue out;
    out.value = v > 0.0 ? v : 0.0;
    out.log2_value = out.value > 0.0
                         ? std::log2(out.value)
                         : -std::numeric_limits<double>::infinity();
    out.method = method;
    return out;
}

}  // namespace

std::string to_string(WafomMethod m) {
    switch (m) {
        case WafomMethod::dual_enum: return "dual";
        case WafomMethod::point_sum: return "points";
        case WafomMethod::exact: return "exact";
    }
    return "?";
}

WafomValue wafom_dual(const Subspace& p, int cap) {
    WeightedGrayEnumerator it(dual(p), cap);
    detail::KahanSum acc;
    while (it.advance()) {  // index 0 is the zero vector, excluded from the sum
        acc.add(pow2_of(-it.weight()));
    }
    return finish(acc.value(), WafomMethod::dual_enum);
}

WafomValue wafom_points(const Subspace& p, int cap) {
    const int n = p.cols();
    const long long cells = p.ambient_dim();
    // factor[j] applied per cell: 1 + 2^-j when the digit is 0, 1 - 2^-j when 1
    std::vector<double> plus(static_cast<std::size_t>(n) + 1);
    std::vector<double> minus(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) {
        plus[static_cast<std::size_t>(j)] = 1.0 + pow2_of(-j);
        minus[static_cast<std::size_t>(j)] = 1.0 - pow2_of(-j);
    }
    GrayEnumerator it(p, cap);
    detail::TwoFloat acc;
    for (;;) {
        const F2Matrix& b = it.current();
        detail::TwoFloat prod{1.0, 0.0};
        for (long long f = 0; f < cells; ++f) {
            const std::size_t j = static_cast<std::size_t>(f % n) + 1;
            prod = detail::mul(prod, b.at_flat(f) ? minus[j] : plus[j]);
        }
        acc = detail::add(acc, detail::add(prod, -1.0));
        if (!it.advance()) break;
    }
    const int shift = -p.dim();
    const double v = std::ldexp(acc.hi, shift) + std::ldexp(acc.lo, shift);
    return finish(v, WafomMethod::point_sum);
}

DyadicRational wafom_exact(const Subspace& p, ExactRoute route, int cap) {
    const long long mmax = max_dick_weight(p.rows(), p.cols());
    if (route == ExactRoute::dual_enum) {
        // sum of 2^-mu = (sum of 2^(mmax-mu)) / 2^mmax
        WeightedGrayEnumerator it(dual(p), cap);
        BigInt acc = 0;
        while (it.advance()) {
            acc += BigInt(1) << static_cast<unsigned long long>(mmax - it.weight());
        }
        return DyadicRational(acc, mmax);
    }
    // Point route: each per-point product of (1 +- 2^-j) equals an integer
    // product of (2^j +- 1) divided by 2^mmax.
    const int n = p.cols();
    const long long cells = p.ambient_dim();
    std::vector<BigInt> fplus(static_cast<std::size_t>(n) + 1);
    std::vector<BigInt> fminus(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) {
        fplus[static_cast<std::size_t>(j)] = (BigInt(1) << static_cast<unsigned>(j)) + 1;
        fminus[static_cast<std::size_t>(j)] = (BigInt(1) << static_cast<unsigned>(j)) - 1;
    }
    GrayEnumerator it(p, cap);
    BigInt total = 0;
    for (;;) {
        const F2Matrix& b = it.current();
        BigInt prod = 1;
        for (long long f = 0; f < cells; ++f) {
            const std::size_t j = static_cast<std::size_t>(f % n) + 1;
            prod *= b.at_flat(f) ? fminus[j] : fplus[j];
        }
        total += prod;
        if (!it.advance()) break;
    }
    const long long denom_exp = mmax + p.dim();
    total -= BigInt(1) << static_cast<unsigned long long>(denom_exp);
    return DyadicRational(total, denom_exp);
}

WafomValue wafom_exact_value(const Subspace& p, int cap) {
    const long long dual_dim = p.ambient_dim() - p.dim();
    const ExactRoute route = dual_dim <= p.dim() ? ExactRoute::dual_enum
                                                 : ExactRoute::point_sum;
    DyadicRational exact = wafom_exact(p, route, cap);
    WafomValue out;
    out.value = exact.to_double();
    out.log2_value = exact.log2();
    out.method = WafomMethod::exact;
    out.exact = std::move(exact);
    return out;
}

}  // namespace wafom
