#include "wafom/dyadic.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace wafom {

namespace {

BigInt magnitude(const BigInt& v) { return v.sign() < 0 ? BigInt(-v) : v; }

}  // namespace

DyadicRational::DyadicRational(BigInt numerator, long long exponent)
    : num_(std::move(numerator)), exp_(exponent) {
    if (exp_ < 0) {  // fold a negative exponent into the numerator
        num_ <<= static_cast<unsigned long long>(-exp_);
        exp_ = 0;
    }
    normalize();
}

void DyadicRational::normalize() {
    if (num_.is_zero()) {
        exp_ = 0;
        return;
    }
    const BigInt mag = magnitude(num_);
    const long long trailing = static_cast<long long>(boost::multiprecision::lsb(mag));
    const long long shift = trailing < exp_ ? trailing : exp_;
    if (shift > 0) {
        num_ >>= static_cast<unsigned long long>(shift);
        exp_ -= shift;
    }
}

DyadicRational DyadicRational::power_of_two(long long k) {
    if (k >= 0) {
        DyadicRational r;
        r.num_ = BigInt(1) << static_cast<unsigned long long>(k);
        r.exp_ = 0;
        return r;
    }
    DyadicRational r;
    r.num_ = 1;
    r.exp_ = -k;
    return r;
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& o) {
    const long long g = exp_ > o.exp_ ? exp_ : o.exp_;
    num_ <<= static_cast<unsigned long long>(g - exp_);
    num_ += o.num_ << static_cast<unsigned long long>(g - o.exp_);
    exp_ = g;
    normalize();
    return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& o) {
    const long long g = exp_ > o.exp_ ? exp_ : o.exp_;
    num_ <<= static_cast<unsigned long long>(g - exp_);
    num_ -= o.num_ << static_cast<unsigned long long>(g - o.exp_);
    exp_ = g;
    normalize();
    return *this;
}

DyadicRational DyadicRational::operator-() const {
    DyadicRational r(*this);
    r.num_ = -r.num_;
    return r;
}

std::strong_ordering DyadicRational::operator<=>(const DyadicRational& o) const {
    const long long g = exp_ > o.exp_ ? exp_ : o.exp_;
    const BigInt a = num_ << static_cast<unsigned long long>(g - exp_);
    const BigInt b = o.num_ << static_cast<unsigned long long>(g - o.exp_);
    const int c = a.compare(b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double DyadicRational::to_double() const {
    if (num_.is_zero()) return 0.0;
    const BigInt mag = magnitude(num_);
    const long long bits = static_cast<long long>(boost::multiprecision::msb(mag));
    // exponent of the leading bit of the value itself
    const long long lead = bits - exp_;
    const double sgn = num_.sign() < 0 ? -1.0 : 1.0;
    if (lead < -1080) return sgn * 0.0;
    if (lead > 1030) return sgn * std::numeric_limits<double>::infinity();
    const long long shift = bits >= 53 ? bits - 52 : 0;
    const double top = BigInt(mag >> static_cast<unsigned long long>(shift))
                           .convert_to<double>();
    return sgn * std::ldexp(top, static_cast<int>(shift - exp_));
}

double DyadicRational::log2() const {
    if (num_.is_zero()) return -std::numeric_limits<double>::infinity();
    if (num_.sign() < 0) return std::numeric_limits<double>::quiet_NaN();
    const long long bits = static_cast<long long>(boost::multiprecision::msb(num_));
    const long long shift = bits >= 53 ? bits - 52 : 0;
    const double top = BigInt(num_ >> static_cast<unsigned long long>(shift))
                           .convert_to<double>();
    return std::log2(top) + static_cast<double>(shift) - static_cast<double>(exp_);
}

std::string DyadicRational::to_string() const {
    return num_.str() + "/2^" + std::to_string(exp_);
}

}  // namespace wafom
