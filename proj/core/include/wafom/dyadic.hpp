#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace wafom {

using BigInt = boost::multiprecision::cpp_int;

/// Exact value numerator / 2^exponent, normalized so the numerator is odd
/// (or zero with exponent 0). Addition and comparison are exact; WAFOM
/// sums are finite sums of powers of two, so they live here losslessly.
class DyadicRational {
  public:
    DyadicRational() = default;  // zero
    DyadicRational(BigInt numerator, long long exponent);

    /// 2^k for any sign of k.
    static DyadicRational power_of_two(long long k);

    const BigInt& numerator() const { return num_; }
    long long exponent() const { return exp_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    DyadicRational& operator+=(const DyadicRational& o);
    DyadicRational& operator-=(const DyadicRational& o);
    DyadicRational operator-() const;
    friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) {
        a += b;
        return a;
    }
    friend DyadicRational operator-(DyadicRational a, const DyadicRational& b) {
        a -= b;
        return a;
    }

    bool operator==(const DyadicRational&) const = default;
    std::strong_ordering operator<=>(const DyadicRational& o) const;

    /// Nearest-ish double (within 1 ulp); underflows gracefully to 0.
    double to_double() const;
    /// log2 of the value: -infinity at zero, NaN for negatives.
    double log2() const;
    /// "numerator/2^exponent" in decimal, e.g. "7/2^3"; "0/2^0" for zero.
    std::string to_string() const;

  private:
    void normalize();

    BigInt num_ = 0;
    long long exp_ = 0;
};

}  // namespace wafom
