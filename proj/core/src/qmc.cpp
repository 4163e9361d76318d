#include "wafom/qmc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace wafom {

double PointSet::coordinate(std::size_t p, int axis) const {
    return std::ldexp(static_cast<double>(numerators.at(p).at(
                          static_cast<std::size_t>(axis))),
                      -digits);
}

PointSet to_points(const Subspace& p, int cap) {
    const int s = p.rows();
    const int n = p.cols();
    if (n > 62) {
        throw std::invalid_argument("to_points: need cols <= 62 for 64-bit numerators");
    }
    PointSet out;
    out.dim = s;
    out.digits = n;
    out.numerators.reserve(static_cast<std::size_t>(1) << p.dim());
    GrayEnumerator it(p, cap);
    for (;;) {
        const F2Matrix& b = it.current();
        std::vector<std::uint64_t> point(static_cast<std::size_t>(s), 0);
        b.for_each_set_bit([&](long long f) {
            const int i = static_cast<int>(f / n);      // 0-based axis
            const int j = static_cast<int>(f % n) + 1;  // digit position
            point[static_cast<std::size_t>(i)] |= std::uint64_t{1} << (n - j);
        });
        out.numerators.push_back(std::move(point));
        if (!it.advance()) break;
    }
    return out;
}

TestFunction make_test_function(const std::string& name, int arity) {
    if (arity < 1) {
        throw std::invalid_argument("make_test_function: arity must be >= 1");
    }
    TestFunction f;
    f.name = name;
    f.arity = arity;
    if (name == "const1") {
        f.integral = 1.0;
        f.eval = [](std::span<const double>) { return 1.0; };
    } else if (name == "linear") {
        f.integral = static_cast<double>(arity) / 2.0;
        f.eval = [](std::span<const double> x) {
            double s = 0.0;
            for (double v : x) s += v;
            return s;
        };
    } else if (name == "product") {
        f.integral = std::ldexp(1.0, -arity);
        f.eval = [](std::span<const double> x) {
            double p = 1.0;
            for (double v : x) p *= v;
            return p;
        };
    } else if (name == "expprod") {
        f.integral = std::pow(std::exp(1.0) - 1.0, arity);
        f.eval = [](std::span<const double> x) {
            double p = 1.0;
            for (double v : x) p *= std::exp(v);
            return p;
        };
    } else {
        throw std::invalid_argument("make_test_function: unknown function \"" +
                                    name + "\"");
    }
    return f;
}

const std::vector<std::string>& test_function_names() {
    static const std::vector<std::string> names = {"const1", "linear", "product",
                                                   "expprod"};
    return names;
}

double qmc_integrate(const PointSet& q, const TestFunction& f) {
    if (f.arity != q.dim) {
        throw std::invalid_argument("qmc_integrate: function arity " +
                                    std::to_string(f.arity) +
                                    " does not match point dimension " +
                                    std::to_string(q.dim));
    }
    if (q.size() == 0) {
        throw std::invalid_argument("qmc_integrate: empty point set");
    }
    std::vector<double> x(static_cast<std::size_t>(q.dim));
    double sum = 0.0;
    for (std::size_t p = 0; p < q.size(); ++p) {
        for (int i = 0; i < q.dim; ++i) {
            x[static_cast<std::size_t>(i)] = q.coordinate(p, i);
        }
        sum += f.eval(x);
    }
    return sum / static_cast<double>(q.size());
}

Subspace random_net(int s, int n, int m, std::uint64_t seed) {
    if (s < 1 || n < 1) {
        throw std::invalid_argument("random_net: dimensions must be >= 1");
    }
    const long long cells = static_cast<long long>(s) * n;
    if (m < 0 || m > cells) {
        throw std::invalid_argument("random_net: need 0 <= m <= s*n");
    }
    std::mt19937_64 rng(seed);
    std::vector<F2Matrix> kept;       // accepted generators, original form
    std::vector<F2Matrix> echelon;    // row-echelon shadow for rank tests
    while (static_cast<int>(kept.size()) < m) {
        F2Matrix cand(s, n);
        std::uint64_t word = 0;
        for (long long f = 0; f < cells; ++f) {
            if (f % 64 == 0) word = rng();
            cand.set_flat(f, (word >> (f % 64)) & 1);
        }
        // echelon is sorted by pivot and an XOR only moves the leading bit
        // deeper, so one ascending pass fully reduces the candidate
        F2Matrix reduced = cand;
        for (const F2Matrix& row : echelon) {
            if (reduced.is_zero()) break;
            if (reduced.leading_bit() == row.leading_bit()) reduced ^= row;
        }
        if (reduced.is_zero()) continue;  // dependent draw, try again
        kept.push_back(cand);
        const auto pos = std::lower_bound(
            echelon.begin(), echelon.end(), reduced,
            [](const F2Matrix& a, const F2Matrix& b) {
                return a.leading_bit() < b.leading_bit();
            });
        echelon.insert(pos, std::move(reduced));
    }
    return canonicalize(s, n, kept);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    // splitmix64 over the (base, index) pair; stable across platforms
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

double spearman(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("spearman: size mismatch");
    }
    const std::size_t n = a.size();
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    const std::vector<double> ra = average_ranks(a);
    const std::vector<double> rb = average_ranks(b);
    const double mean = (static_cast<double>(n) + 1.0) / 2.0;
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = ra[i] - mean;
        const double db = rb[i] - mean;
        cov += da * db;
        va += da * da;
        vb += db * db;
    }
    if (va == 0.0 || vb == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return cov / std::sqrt(va * vb);
}

}  // namespace wafom
