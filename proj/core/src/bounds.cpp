#include "wafom/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wafom/format.hpp"
#include "wafom/wafom.hpp"
#include "wafom/weights.hpp"

namespace wafom {

QRDecomposition qr_decompose(long long m, long long s) {
    if (m < 1) throw std::invalid_argument("qr_decompose: m must be >= 1");
    if (s < 1) throw std::invalid_argument("qr_decompose: s must be >= 1");
    return {m, s, m / s, m % s};
}

long long delta_upper_bound(long long s, long long m) {
    const QRDecomposition d = qr_decompose(m, s);
    return s * d.q * (d.q + 1) / 2 + (d.q + 1) * (d.r + 1);
}

Subspace staircase_space(int s, int n, int m) {
    if (s < 1 || n < 1) {
        throw std::invalid_argument("staircase_space: dimensions must be >= 1");
    }
    const long long cells = static_cast<long long>(s) * n;
    if (m < 0 || m >= cells) {
        throw std::invalid_argument("staircase_space: need 0 <= m < s*n");
    }
    const int q = m / s;
    const int r = m % s;
    std::vector<F2Matrix> gens;
    gens.reserve(static_cast<std::size_t>(s) * q + r + 1);
    for (int i = 1; i <= s; ++i) {
        const int top = i <= r + 1 ? q + 1 : q;  // q+1 <= n since m < s*n
        for (int j = 1; j <= top; ++j) {
            gens.push_back(F2Matrix::unit(s, n, i, j));
        }
    }
    return canonicalize(s, n, gens);
}

F2Matrix witness(const Subspace& p) {
    const int s = p.rows();
    const int n = p.cols();
    if (p.dim() >= p.ambient_dim()) {
        throw std::invalid_argument("witness: P must be a proper subspace");
    }
    const Subspace w = staircase_space(s, n, p.dim());
    const Subspace hit = intersect(dual(p), w);
    // dim(dual P) + dim W - s*n = 1, so the intersection is never trivial
    return hit.basis().front();
}

double theorem_threshold(double c_prime) {
    if (!(c_prime > 0.5)) {
        throw std::invalid_argument("theorem_threshold: need c' > 1/2");
    }
    return (std::sqrt(c_prime + 0.0625) + 0.75) / (c_prime - 0.5);
}

bool threshold_met(long long m, long long s, double c_prime) {
    if (!(c_prime > 0.5)) {
        throw std::invalid_argument("threshold_met: need c' > 1/2");
    }
    if (m < 1 || s < 1) {
        throw std::invalid_argument("threshold_met: need m >= 1 and s >= 1");
    }
    // m/s >= (sqrt(c'+1/16) + 3/4)/(c'-1/2)
    //   <=>  t := m(c'-1/2) - 3s/4  satisfies t >= 0 and t^2 >= s^2 (c'+1/16)
    const double md = static_cast<double>(m);
    const double sd = static_cast<double>(s);
    const double t = md * (c_prime - 0.5) - 0.75 * sd;
    if (t < 0.0) return false;
    return t * t >= sd * sd * (c_prime + 0.0625) * (1.0 + 1e-12);
}

double lower_bound_log2(double c_prime, long long m, long long s) {
    if (!(c_prime > 0.5)) {
        throw std::invalid_argument("lower_bound_log2: need c' > 1/2");
    }
    if (m < 1 || s < 1) {
        throw std::invalid_argument("lower_bound_log2: need m >= 1 and s >= 1");
    }
    return -c_prime * static_cast<double>(m) * static_cast<double>(m) /
           static_cast<double>(s);
}

VerificationReport verify_net(const Subspace& p, double c_prime, int cap) {
    const int s = p.rows();
    const int n = p.cols();
    const int m = p.dim();
    if (m < 1 || m >= p.ambient_dim()) {
        throw std::invalid_argument("verify_net: need 1 <= dim P < s*n");
    }
    VerificationReport r;
    r.s = s;
    r.n = n;
    r.m = m;
    r.c_prime = c_prime;
    r.delta = min_weight(dual(p), cap);
    r.delta_bound = delta_upper_bound(s, m);
    const WafomValue w = wafom_exact_value(p, cap);
    r.wafom_log2 = w.log2_value;
    r.lower_bound_log2 = lower_bound_log2(c_prime, m, s);
    r.threshold_ok = threshold_met(m, s, c_prime);
    r.lemma_ok = r.delta <= r.delta_bound;
    r.wfdelta_ok = *w.exact >= DyadicRational::power_of_two(-r.delta);
    r.theorem_ok = r.wafom_log2 >= r.lower_bound_log2;
    return r;
}

std::string report_csv_header() {
    return "id,s,n,m,c_prime,delta,delta_bound,wafom_log2,lower_bound_log2,"
           "threshold_ok,lemma_ok,wfdelta_ok,theorem_ok";
}

std::string report_csv_row(const VerificationReport& r, std::string_view id) {
    std::string row(id);
    row += ',';
    row += std::to_string(r.s);
    row += ',';
    row += std::to_string(r.n);
    row += ',';
    row += std::to_string(r.m);
    row += ',';
    row += format_double(r.c_prime);
    row += ',';
    row += std::to_string(r.delta);
    row += ',';
    row += std::to_string(r.delta_bound);
    row += ',';
    row += format_double(r.wafom_log2);
    row += ',';
    row += format_double(r.lower_bound_log2);
    row += ',';
    row += r.threshold_ok ? '1' : '0';
    row += ',';
    row += r.lemma_ok ? '1' : '0';
    row += ',';
    row += r.wfdelta_ok ? '1' : '0';
    row += ',';
    row += r.theorem_ok ? '1' : '0';
    return row;
}

}  // namespace wafom
