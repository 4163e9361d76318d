#pragma once

#include <cmath>

// Double-double and compensated-summation primitives. The point-sum WAFOM
// route subtracts values agreeing to ~2^-j per coordinate digit, so plain
// doubles lose the result to cancellation once WAFOM drops below ~1e-12;
// carrying ~106 bits through the products keeps the relative error near
// 1e-30, far inside the 1e-10 agreement we promise against the dual route.
namespace wafom::detail {

struct TwoFloat {
    double hi = 0.0;
    double lo = 0.0;
};

inline TwoFloat two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b| or a == 0
inline TwoFloat quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline TwoFloat two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline TwoFloat mul(const TwoFloat& a, double b) {
    TwoFloat p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline TwoFloat add(const TwoFloat& a, double b) {
    TwoFloat s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline TwoFloat add(const TwoFloat& a, const TwoFloat& b) {
    TwoFloat s = two_sum(a.hi, b.hi);
    const TwoFloat t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

/// Neumaier-compensated running sum; exact enough for sums of powers of two
/// spanning the double exponent range.
class KahanSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace wafom::detail
