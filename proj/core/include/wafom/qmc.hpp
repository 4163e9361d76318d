#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wafom/f2.hpp"

namespace wafom {

/// The points of a digital net: per point, one dyadic numerator per axis,
/// coordinate value = numerator / 2^digits in [0, 1).
struct PointSet {
    int dim = 0;     // number of axes (s)
    int digits = 0;  // dyadic precision (n)
    std::vector<std::vector<std::uint64_t>> numerators;  // [point][axis]

    std::size_t size() const { return numerators.size(); }
    /// Coordinate of point `p` on 0-based axis `axis`.
    double coordinate(std::size_t p, int axis) const;
};

/// Maps every matrix B in P to the point whose axis-i numerator has the bits
/// of row i (digit j contributing 2^(digits-j)). Injective, so the result
/// has exactly 2^(dim P) distinct points. Requires cols <= 62.
PointSet to_points(const Subspace& p, int cap = kDefaultEnumCap);

struct TestFunction {
    std::string name;
    int arity = 0;
    double integral = 0.0;  // exact integral over the unit cube
    std::function<double(std::span<const double>)> eval;
};

/// Battery member by name: "const1" (integral 1), "linear" (sum x_i, s/2),
/// "product" (prod x_i, 2^-s), "expprod" (prod e^{x_i}, (e-1)^s).
TestFunction make_test_function(const std::string& name, int arity);

const std::vector<std::string>& test_function_names();

/// Equal-weight average of f over the points. Requires f.arity == q.dim.
double qmc_integrate(const PointSet& q, const TestFunction& f);

/// Deterministic m-dimensional subspace of the s x n matrices drawn from
/// `seed`: candidate rows are sampled uniformly and kept while independent.
/// Requires 0 <= m <= s*n.
Subspace random_net(int s, int n, int m, std::uint64_t seed);

/// Stable per-index stream seed for batches drawn from one base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Spearman rank correlation with average ranks on ties; NaN when either
/// side has fewer than two values or no variation.
double spearman(std::span<const double> a, std::span<const double> b);

}  // namespace wafom
