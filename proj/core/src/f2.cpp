#include "wafom/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wafom {

namespace {

std::size_t word_count(long long bits) {
    return static_cast<std::size_t>((bits + 63) / 64);
}

}  // namespace

F2Matrix::F2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("F2Matrix: rows and cols must be positive");
    }
    // Dick weights sum to at most s*n*(n+1)/2; keep that inside long long.
    unsigned __int128 wmax = static_cast<unsigned __int128>(rows) * cols * (cols + 1) / 2;
    if (wmax > static_cast<unsigned __int128>(0x7fffffffffffffffLL)) {
        throw std::invalid_argument("F2Matrix: shape too large for weight arithmetic");
    }
    words_.assign(word_count(cell_count()), 0);
}

F2Matrix F2Matrix::unit(int rows, int cols, int i, int j) {
    F2Matrix x(rows, cols);
    x.set(i, j, true);
    return x;
}

bool F2Matrix::at(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
        throw std::out_of_range("F2Matrix::at: index out of range");
    }
    return at_flat(static_cast<long long>(i - 1) * cols_ + (j - 1));
}

void F2Matrix::set(int i, int j, bool v) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
        throw std::out_of_range("F2Matrix::set: index out of range");
    }
    set_flat(static_cast<long long>(i - 1) * cols_ + (j - 1), v);
}

void F2Matrix::set_flat(long long f, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (f & 63);
    if (v) {
        words_[static_cast<std::size_t>(f >> 6)] |= mask;
    } else {
        words_[static_cast<std::size_t>(f >> 6)] &= ~mask;
    }
}

bool F2Matrix::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

long long F2Matrix::leading_bit() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) {
            return static_cast<long long>(w) * 64 + std::countr_zero(words_[w]);
        }
    }
    return -1;
}

int F2Matrix::popcount() const {
    int total = 0;
    for (std::uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

void F2Matrix::check_shape_against(const F2Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("F2Matrix: shape mismatch");
    }
}

F2Matrix& F2Matrix::operator^=(const F2Matrix& o) {
    check_shape_against(o);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= o.words_[w];
    }
    return *this;
}

int inner_product(const F2Matrix& a, const F2Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("inner_product: shape mismatch");
    }
    std::uint64_t parity = 0;
    for (std::size_t w = 0; w < a.words().size(); ++w) {
        parity ^= a.words()[w] & b.words()[w];
    }
    return std::popcount(parity) & 1;
}

Subspace::Subspace(int rows, int cols) : rows_(rows), cols_(cols) {
    F2Matrix probe(rows, cols);  // validates the shape
    (void)probe;
}

Subspace::Subspace(int rows, int cols, std::vector<F2Matrix> rref)
    : rows_(rows), cols_(cols), basis_(std::move(rref)) {}

Subspace Subspace::full(int rows, int cols) {
    std::vector<F2Matrix> basis;
    long long n = static_cast<long long>(rows) * cols;
    basis.reserve(static_cast<std::size_t>(n));
    for (long long f = 0; f < n; ++f) {
        F2Matrix e(rows, cols);
        e.set_flat(f, true);
        basis.push_back(std::move(e));
    }
    return Subspace(rows, cols, std::move(basis));
}

bool Subspace::contains(F2Matrix x) const {
    if (x.rows() != rows_ || x.cols() != cols_) {
        throw std::invalid_argument("Subspace::contains: shape mismatch");
    }
    for (const F2Matrix& row : basis_) {
        if (x.at_flat(row.leading_bit())) {
            x ^= row;
        }
    }
    return x.is_zero();
}

Subspace canonicalize(int rows, int cols, std::span<const F2Matrix> vectors) {
    std::vector<F2Matrix> rref;
    for (const F2Matrix& v : vectors) {
        if (v.rows() != rows || v.cols() != cols) {
            throw std::invalid_argument("canonicalize: shape mismatch among inputs");
        }
        F2Matrix w = v;
        for (const F2Matrix& row : rref) {
            if (w.at_flat(row.leading_bit())) {
                w ^= row;
            }
        }
        if (w.is_zero()) {
            continue;
        }
        long long pivot = w.leading_bit();
        for (F2Matrix& row : rref) {
            if (row.at_flat(pivot)) {
                row ^= w;
            }
        }
        auto pos = std::lower_bound(rref.begin(), rref.end(), pivot,
                                    [](const F2Matrix& r, long long p) { return r.leading_bit() < p; });
        rref.insert(pos, std::move(w));
    }
    return Subspace(rows, cols, std::move(rref));
}

Subspace canonicalize(int rows, int cols, std::initializer_list<F2Matrix> vectors) {
    return canonicalize(rows, cols, std::span<const F2Matrix>(vectors.begin(), vectors.size()));
}

Subspace dual(const Subspace& p) {
    const long long n = p.ambient_dim();
    const auto& basis = p.basis();
    std::vector<long long> pivots;
    pivots.reserve(basis.size());
    for (const F2Matrix& row : basis) {
        pivots.push_back(row.leading_bit());
    }

    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (long long piv : pivots) {
        is_pivot[static_cast<std::size_t>(piv)] = true;
    }

    // One kernel vector per free column: 1 at the free column, plus the
    // column's entries copied into the pivot coordinates.
    std::vector<F2Matrix> kernel;
    for (long long f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) {
            continue;
        }
        F2Matrix v(p.rows(), p.cols());
        v.set_flat(f, true);
        for (std::size_t t = 0; t < basis.size(); ++t) {
            if (basis[t].at_flat(f)) {
                v.set_flat(pivots[t], true);
            }
        }
        kernel.push_back(std::move(v));
    }
    return canonicalize(p.rows(), p.cols(), kernel);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("intersect: shape mismatch");
    }
    // A ∩ B = (A⊥ + B⊥)⊥
    Subspace da = dual(a);
    Subspace db = dual(b);
    std::vector<F2Matrix> joined = da.basis();
    joined.insert(joined.end(), db.basis().begin(), db.basis().end());
    return dual(canonicalize(a.rows(), a.cols(), joined));
}

GrayEnumerator::GrayEnumerator(const Subspace& space, int cap)
    : current_(space.rows(), space.cols()) {
    int d = space.dim();
    if (d > cap || d > kHardEnumLimit) {
        throw CapExceeded("GrayEnumerator: dim " + std::to_string(d) + " exceeds cap " +
                          std::to_string(std::min(cap, kHardEnumLimit)));
    }
    basis_ = space.basis();
    size_ = std::uint64_t{1} << d;
}

bool GrayEnumerator::advance() {
    if (index_ + 1 >= size_) {
        return false;
    }
    ++index_;
    // Reflected Gray code: the step to index k flips bit ctz(k).
    last_flipped_ = std::countr_zero(index_);
    current_ ^= basis_[static_cast<std::size_t>(last_flipped_)];
    return true;
}

SubspaceEnumerator::SubspaceEnumerator(int rows, int cols, int m, int cap)
    : rows_(rows), cols_(cols), m_(m), n_(static_cast<long long>(rows) * cols) {
    F2Matrix probe(rows, cols);  // validates the shape
    (void)probe;
    if (n_ > cap) {
        throw CapExceeded("SubspaceEnumerator: s*n = " + std::to_string(n_) +
                          " exceeds cap " + std::to_string(cap));
    }
    if (m < 0 || m > n_) {
        throw std::invalid_argument("SubspaceEnumerator: m out of range");
    }
    pivots_.resize(static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t) {
        pivots_[static_cast<std::size_t>(t)] = t;
    }
    load_cell();
}

void SubspaceEnumerator::load_cell() {
    free_cells_.clear();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n_), false);
    for (int piv : pivots_) {
        is_pivot[static_cast<std::size_t>(piv)] = true;
    }
    for (int t = 0; t < m_; ++t) {
        for (long long c = pivots_[static_cast<std::size_t>(t)] + 1; c < n_; ++c) {
            if (!is_pivot[static_cast<std::size_t>(c)]) {
                free_cells_.push_back(static_cast<long long>(t) * n_ + c);
            }
        }
    }
    fill_ = 0;
    fill_count_ = std::uint64_t{1} << free_cells_.size();
}

std::optional<Subspace> SubspaceEnumerator::next() {
    if (done_) {
        return std::nullopt;
    }

    std::vector<F2Matrix> rows;
    rows.reserve(static_cast<std::size_t>(m_));
    for (int t = 0; t < m_; ++t) {
        F2Matrix row(rows_, cols_);
        row.set_flat(pivots_[static_cast<std::size_t>(t)], true);
        rows.push_back(std::move(row));
    }
    for (std::size_t k = 0; k < free_cells_.size(); ++k) {
        if ((fill_ >> k) & 1u) {
            long long cell = free_cells_[k];
            rows[static_cast<std::size_t>(cell / n_)].set_flat(cell % n_, true);
        }
    }
    Subspace out(rows_, cols_, std::move(rows));

    // Advance: next filling, else next pivot combination (lexicographic).
    if (++fill_ >= fill_count_) {
        int k = m_;
        int i = k - 1;
        while (i >= 0 && pivots_[static_cast<std::size_t>(i)] == n_ - k + i) {
            --i;
        }
        if (i < 0) {
            done_ = true;
        } else {
            ++pivots_[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < k; ++t) {
                pivots_[static_cast<std::size_t>(t)] = pivots_[static_cast<std::size_t>(t - 1)] + 1;
            }
            load_cell();
        }
    }
    return out;
}

}  // namespace wafom
