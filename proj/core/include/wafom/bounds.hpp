#pragma once

#include <string>
#include <string_view>

#include "wafom/f2.hpp"

namespace wafom {

/// m = q*s + r with 0 <= r < s.
struct QRDecomposition {
    long long m = 0;
    long long s = 0;
    long long q = 0;
    long long r = 0;
};

QRDecomposition qr_decompose(long long m, long long s);  // m >= 1, s >= 1

/// Staircase bound on the minimum Dick weight of any dual of dimension
/// s*n - m:  s*q*(q+1)/2 + (q+1)*(r+1).
long long delta_upper_bound(long long s, long long m);

/// The staircase space W for parameters (s, n, m): spanned by the unit
/// matrices with a free cell in columns 1..q+1 on rows 1..r+1 and columns
/// 1..q on the remaining rows. dim W = s*q + r + 1. Requires 0 <= m < s*n.
Subspace staircase_space(int s, int n, int m);

/// A nonzero element of dual(P) supported on the staircase cells; exists for
/// every proper subspace P by dimension count. Its Dick weight is at most
/// delta_upper_bound(s, dim P).
F2Matrix witness(const Subspace& p);

/// Smallest m/s ratio at which the lower bound applies:
///   (sqrt(c' + 1/16) + 3/4) / (c' - 1/2).  Requires c' > 1/2.
double theorem_threshold(double c_prime);

/// Whether m/s clears theorem_threshold(c_prime). Evaluated in a squared,
/// subtraction-free form with a tiny slack toward rejection, so borderline
/// float ties never claim the bound where it might not hold.
bool threshold_met(long long m, long long s, double c_prime);

/// log2 of the guaranteed WAFOM lower bound: -c' * m^2 / s.
double lower_bound_log2(double c_prime, long long m, long long s);

struct VerificationReport {
    int s = 0;
    int n = 0;
    int m = 0;
    double c_prime = 0.0;
    long long delta = 0;           // minimum Dick weight of dual(P)
    long long delta_bound = 0;     // staircase upper bound for delta
    double wafom_log2 = 0.0;       // from the exact WAFOM value
    double lower_bound_log2 = 0.0; // -c' * m^2 / s
    bool threshold_ok = false;     // m/s clears the applicability threshold
    bool lemma_ok = false;         // delta <= delta_bound
    bool wfdelta_ok = false;       // WAFOM >= 2^-delta, compared exactly
    bool theorem_ok = false;       // wafom_log2 >= lower_bound_log2
};

/// Full verification for one net. Requires 1 <= dim P < s*n and c' > 1/2.
VerificationReport verify_net(const Subspace& p, double c_prime,
                              int cap = kDefaultEnumCap);

std::string report_csv_header();
std::string report_csv_row(const VerificationReport& r, std::string_view id);

}  // namespace wafom
