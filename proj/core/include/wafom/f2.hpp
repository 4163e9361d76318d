#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wafom/errors.hpp"

namespace wafom {

/// Default cap on the dimension of an element enumeration (2^30 elements).
inline constexpr int kDefaultEnumCap = 30;
/// Default cap on s*n for whole-Grassmannian subspace enumeration.
inline constexpr int kDefaultSubspaceEnumCap = 12;
/// Structural limit: Gray counters are 64-bit.
inline constexpr int kHardEnumLimit = 62;

/// An s x n matrix over F2, bit-packed row-major: entry (i, j) with
/// 1 <= i <= s, 1 <= j <= n lives at flat index (i-1)*n + (j-1).
/// The flat layout is fixed; the net file format and all pivot
/// conventions key on it.
class F2Matrix {
  public:
    F2Matrix(int rows, int cols);

    /// Single 1 at (i, j), 1-based.
    static F2Matrix unit(int rows, int cols, int i, int j);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long cell_count() const { return static_cast<long long>(rows_) * cols_; }

    bool at(int i, int j) const;   // 1-based
    void set(int i, int j, bool v);

    bool at_flat(long long f) const {
        return (words_[static_cast<std::size_t>(f >> 6)] >> (f & 63)) & 1u;
    }
    void set_flat(long long f, bool v);

    bool is_zero() const;
    /// Lowest set flat index, or -1 for the zero matrix.
    long long leading_bit() const;
    int popcount() const;

    F2Matrix& operator^=(const F2Matrix& o);
    friend F2Matrix operator^(F2Matrix a, const F2Matrix& b) {
        a ^= b;
        return a;
    }
    bool operator==(const F2Matrix&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Visits set flat indices in ascending order.
    template <typename Fn>
    void for_each_set_bit(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                int b = std::countr_zero(x);
                fn(static_cast<long long>(w) * 64 + b);
                x &= x - 1;
            }
        }
    }

  private:
    void check_shape_against(const F2Matrix& o) const;

    int rows_;
    int cols_;
    std::vector<std::uint64_t> words_;
};

/// Entrywise F2 inner product: parity of the overlap of the two bit sets.
int inner_product(const F2Matrix& a, const F2Matrix& b);

/// A linear subspace of M_{s,n}(F2), held as a reduced row-echelon basis
/// over the flattened sn coordinates (pivots strictly increasing, pivot
/// columns otherwise zero). The RREF basis is unique per subspace, so
/// operator== is literal basis comparison.
class Subspace {
  public:
    /// The zero subspace {O}.
    Subspace(int rows, int cols);

    static Subspace full(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long ambient_dim() const { return static_cast<long long>(rows_) * cols_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    const std::vector<F2Matrix>& basis() const { return basis_; }

    bool contains(F2Matrix x) const;

    bool operator==(const Subspace&) const = default;

  private:
    // Rows must already be in RREF; only canonicalize() and the
    // by-construction-canonical enumerator build these.
    Subspace(int rows, int cols, std::vector<F2Matrix> rref);
    friend Subspace canonicalize(int rows, int cols, std::span<const F2Matrix> vectors);
    friend class SubspaceEnumerator;

    int rows_;
    int cols_;
    std::vector<F2Matrix> basis_;
};

/// Span of the given vectors as a canonical RREF basis. Duplicates and
/// dependent vectors collapse; dim equals the rank of the input.
Subspace canonicalize(int rows, int cols, std::span<const F2Matrix> vectors);
Subspace canonicalize(int rows, int cols, std::initializer_list<F2Matrix> vectors);

/// Orthogonal space under the entrywise inner product.
/// dim(dual(P)) = s*n - dim(P) and dual(dual(P)) == P.
Subspace dual(const Subspace& p);

/// dim(intersect(a, b)) >= dim a + dim b - s*n.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Streams every element of a subspace exactly once, starting at O, in
/// reflected-Gray order over the basis coefficients: consecutive elements
/// differ by exactly one basis vector. Throws CapExceeded when dim > cap.
class GrayEnumerator {
  public:
    explicit GrayEnumerator(const Subspace& space, int cap = kDefaultEnumCap);

    const F2Matrix& current() const { return current_; }
    /// Index of the basis vector flipped by the last advance (-1 before any).
    int last_flipped() const { return last_flipped_; }
    const F2Matrix& basis_vector(int idx) const { return basis_[static_cast<std::size_t>(idx)]; }
    std::uint64_t index() const { return index_; }
    std::uint64_t size() const { return size_; }

    /// Moves to the next element; false once all 2^dim have been visited.
    bool advance();

  private:
    std::vector<F2Matrix> basis_;
    F2Matrix current_;
    std::uint64_t index_ = 0;
    std::uint64_t size_;
    int last_flipped_ = -1;
};

/// Streams every m-dimensional subspace of M_{s,n}(F2) exactly once (one
/// canonical RREF basis each) by Schubert cell: all pivot-column
/// combinations, all fillings of the free cells. The total count is the
/// Gaussian binomial [s*n choose m]_2. Throws CapExceeded when s*n > cap.
class SubspaceEnumerator {
  public:
    SubspaceEnumerator(int rows, int cols, int m, int cap = kDefaultSubspaceEnumCap);

    std::optional<Subspace> next();

  private:
    void load_cell();

    int rows_, cols_, m_;
    long long n_;                 // ambient dimension s*n
    std::vector<int> pivots_;     // current pivot-column combination
    std::vector<long long> free_cells_;  // flat (row t, col c) pairs as t*n_+c
    std::uint64_t fill_ = 0;
    std::uint64_t fill_count_ = 0;
    bool done_ = false;
};

}  // namespace wafom
