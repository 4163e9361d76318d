#include "doctest.h"

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "wafom/errors.hpp"
#include "wafom/f2.hpp"

using namespace wafom;

namespace {

F2Matrix random_matrix(std::mt19937_64& rng, int s, int n) {
    F2Matrix x(s, n);
    std::uint64_t word = 0;
    for (long long f = 0; f < static_cast<long long>(s) * n; ++f) {
        if (f % 64 == 0) word = rng();
        x.set_flat(f, (word >> (f % 64)) & 1);
    }
    return x;
}

using Key = std::vector<std::uint64_t>;

// every XOR combination of the generators, as raw words: the span, brute force
std::set<Key> brute_span(int s, int n, const std::vector<F2Matrix>& gens) {
    std::set<Key> out;
    const std::size_t k = gens.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        F2Matrix acc(s, n);
        for (std::size_t i = 0; i < k; ++i) {
            if ((mask >> i) & 1) acc ^= gens[i];
        }
        out.insert(acc.words());
    }
    return out;
}

std::vector<F2Matrix> all_matrices(int s, int n) {
    const long long cells = static_cast<long long>(s) * n;
    std::vector<F2Matrix> out;
    out.reserve(std::size_t{1} << cells);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        F2Matrix x(s, n);
        for (long long f = 0; f < cells; ++f) {
            x.set_flat(f, (mask >> f) & 1);
        }
        out.push_back(std::move(x));
    }
    return out;
}

Subspace random_subspace(std::mt19937_64& rng, int s, int n, int gens) {
    std::vector<F2Matrix> v;
    for (int i = 0; i < gens; ++i) v.push_back(random_matrix(rng, s, n));
    return canonicalize(s, n, v);
}

}  // namespace

TEST_CASE("matrix construction and element access") {
    F2Matrix x(2, 3);
    CHECK(x.rows() == 2);
    CHECK(x.cols() == 3);
    CHECK(x.is_zero());
    CHECK(x.popcount() == 0);

    x.set(1, 2, true);
    CHECK(x.at(1, 2));
    CHECK_FALSE(x.at(1, 1));
    CHECK_FALSE(x.is_zero());
    CHECK(x.popcount() == 1);
    CHECK(x.leading_bit() == 1);  // flat index of (1,2)

    // flat and 2-d views address the same storage
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 3; ++j) {
            CHECK(x.at(i, j) == x.at_flat((i - 1) * 3 + (j - 1)));
        }
    }

    const F2Matrix u = F2Matrix::unit(2, 3, 2, 3);
    CHECK(u.popcount() == 1);
    CHECK(u.at(2, 3));
    CHECK(u.leading_bit() == 5);

    CHECK_THROWS_AS(F2Matrix(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(F2Matrix(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(x.at(0, 1), std::out_of_range);
    CHECK_THROWS_AS(x.at(3, 1), std::out_of_range);
    CHECK_THROWS_AS(x.at(1, 4), std::out_of_range);
    CHECK_THROWS_AS(F2Matrix::unit(2, 3, 1, 0), std::out_of_range);
}

TEST_CASE("xor, popcount and bit traversal against per-entry loops") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const int s = 1 + static_cast<int>(rng() % 4);
        const int n = 1 + static_cast<int>(rng() % 5);
        F2Matrix a = random_matrix(rng, s, n);
        const F2Matrix b = random_matrix(rng, s, n);

        int count = 0;
        long long first = -1;
        for (long long f = 0; f < static_cast<long long>(s) * n; ++f) {
            if (a.at_flat(f)) {
                ++count;
                if (first < 0) first = f;
            }
        }
        CHECK(a.popcount() == count);
        if (count > 0) CHECK(a.leading_bit() == first);

        std::vector<long long> seen;
        a.for_each_set_bit([&](long long f) { seen.push_back(f); });
        CHECK(static_cast<int>(seen.size()) == count);
        for (std::size_t i = 0; i + 1 < seen.size(); ++i) {
            CHECK(seen[i] < seen[i + 1]);  // ascending order
        }
        for (long long f : seen) CHECK(a.at_flat(f));

        // inner product is the parity of the entrywise AND
        int overlap = 0;
        for (long long f = 0; f < static_cast<long long>(s) * n; ++f) {
            overlap += (a.at_flat(f) && b.at_flat(f)) ? 1 : 0;
        }
        CHECK(inner_product(a, b) == overlap % 2);
        CHECK(inner_product(a, b) == inner_product(b, a));

        const F2Matrix before = a;
        a ^= b;
        for (long long f = 0; f < static_cast<long long>(s) * n; ++f) {
            CHECK(a.at_flat(f) == (before.at_flat(f) != b.at_flat(f)));
        }
        a ^= b;
        CHECK(a == before);
    }
}

TEST_CASE("canonicalize yields the reduced echelon basis of the span") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        const int s = 1 + static_cast<int>(rng() % 3);
        const int n = 1 + static_cast<int>(rng() % 4);
        const int k = static_cast<int>(rng() % 5);
        std::vector<F2Matrix> gens;
        for (int i = 0; i < k; ++i) gens.push_back(random_matrix(rng, s, n));

        const Subspace sp = canonicalize(s, n, gens);
        const std::set<Key> span = brute_span(s, n, gens);

        // dimension matches the brute-force span size
        CHECK((std::size_t{1} << sp.dim()) == span.size());
        for (const F2Matrix& g : gens) CHECK(sp.contains(g));

        // reduced echelon shape: pivots strictly increase, and each pivot
        // position is zero in every other basis vector
        const auto& basis = sp.basis();
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
            CHECK(basis[i].leading_bit() < basis[i + 1].leading_bit());
        }
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i != j) CHECK_FALSE(basis[j].at_flat(basis[i].leading_bit()));
            }
        }

        // membership agrees with the brute-force span over all of M_{s,n}
        if (static_cast<long long>(s) * n <= 10) {
            for (const F2Matrix& x : all_matrices(s, n)) {
                CHECK(sp.contains(x) == (span.count(x.words()) > 0));
            }
        }

        // canonical form is generator-order and combination independent
        if (!gens.empty()) {
            std::vector<F2Matrix> mixed(gens.rbegin(), gens.rend());
            F2Matrix combo = gens.front();
            for (std::size_t i = 1; i < gens.size(); ++i) combo ^= gens[i];
            mixed.push_back(combo);
            CHECK(canonicalize(s, n, mixed) == sp);
        }
    }
}

TEST_CASE("duals match the exhaustive orthogonal complement") {
    std::mt19937_64 rng(424242);
    const int shapes[][2] = {{1, 2}, {1, 3}, {2, 2}, {3, 3}, {2, 4}};
    for (const auto& shape : shapes) {
        const int s = shape[0];
        const int n = shape[1];
        const std::vector<F2Matrix> everything = all_matrices(s, n);
        for (int trial = 0; trial < 8; ++trial) {
            const Subspace p = random_subspace(rng, s, n, static_cast<int>(rng() % 5));
            const Subspace d = dual(p);
            CHECK(d.dim() == static_cast<long long>(s) * n - p.dim());

            std::size_t orthogonal = 0;
            for (const F2Matrix& x : everything) {
                bool orth = true;
                for (const F2Matrix& g : p.basis()) {
                    if (inner_product(x, g) != 0) {
                        orth = false;
                        break;
                    }
                }
                CHECK(d.contains(x) == orth);
                if (orth) ++orthogonal;
            }
            CHECK(orthogonal == (std::size_t{1} << d.dim()));
            CHECK(dual(d) == p);
        }
    }

    const Subspace zero(2, 3);
    const Subspace everything = Subspace::full(2, 3);
    CHECK(dual(zero) == everything);
    CHECK(dual(everything) == zero);
}

TEST_CASE("intersection matches exhaustive joint membership") {
    std::mt19937_64 rng(9090);
    for (int trial = 0; trial < 25; ++trial) {
        const int s = 1 + static_cast<int>(rng() % 2);
        const int n = 2 + static_cast<int>(rng() % 3);
        const Subspace a = random_subspace(rng, s, n, static_cast<int>(rng() % 5));
        const Subspace b = random_subspace(rng, s, n, static_cast<int>(rng() % 5));
        const Subspace ab = intersect(a, b);
        for (const F2Matrix& x : all_matrices(s, n)) {
            CHECK(ab.contains(x) == (a.contains(x) && b.contains(x)));
        }
        CHECK(intersect(a, Subspace::full(s, n)) == a);
        CHECK(intersect(a, a) == a);
    }
}

TEST_CASE("gray enumeration visits each element exactly once") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        const int s = 1 + static_cast<int>(rng() % 3);
        const int n = 1 + static_cast<int>(rng() % 4);
        const Subspace sp = random_subspace(rng, s, n, static_cast<int>(rng() % 6));

        GrayEnumerator it(sp);
        CHECK(it.size() == (std::uint64_t{1} << sp.dim()));
        CHECK(it.index() == 0);
        CHECK(it.current().is_zero());  // enumeration starts at the origin

        std::set<Key> seen;
        F2Matrix prev = it.current();
        seen.insert(prev.words());
        while (it.advance()) {
            const F2Matrix& cur = it.current();
            CHECK(sp.contains(cur));
            // consecutive elements differ by exactly the flipped basis vector
            F2Matrix diff = cur;
            diff ^= prev;
            CHECK(diff == it.basis_vector(it.last_flipped()));
            seen.insert(cur.words());
            prev = cur;
        }
        CHECK(seen.size() == it.size());
        CHECK(it.index() == it.size() - 1);
    }

    // the zero subspace enumerates exactly one element
    GrayEnumerator zero_it(Subspace(2, 2));
    CHECK(zero_it.size() == 1);
    CHECK_FALSE(zero_it.advance());

    // dimension above the cap is refused up front
    const Subspace big = Subspace::full(3, 4);
    CHECK_THROWS_AS(GrayEnumerator(big, 11), CapExceeded);
    CHECK_NOTHROW(GrayEnumerator(big, 12));
}

namespace {

// number of k-dimensional subspaces of F2^N, by the standard recurrence
std::uint64_t gaussian_binomial(int N, int k) {
    if (k < 0 || k > N) return 0;
    if (k == 0 || k == N) return 1;
    return gaussian_binomial(N - 1, k - 1) +
           (std::uint64_t{1} << k) * gaussian_binomial(N - 1, k);
}

}  // namespace

TEST_CASE("subspace enumeration hits every subspace of the given dimension") {
    const int shapes[][2] = {{1, 3}, {3, 1}, {2, 2}, {1, 4}, {2, 3}};
    for (const auto& shape : shapes) {
        const int s = shape[0];
        const int n = shape[1];
        const int N = s * n;
        for (int m = 0; m <= N; ++m) {
            SubspaceEnumerator en(s, n, m);
            std::set<std::vector<Key>> seen;
            while (auto sp = en.next()) {
                CHECK(sp->dim() == m);
                CHECK(sp->rows() == s);
                CHECK(sp->cols() == n);
                // emitted form must already be canonical
                CHECK(canonicalize(s, n, sp->basis()) == *sp);
                std::vector<Key> key;
                for (const F2Matrix& b : sp->basis()) key.push_back(b.words());
                seen.insert(std::move(key));
            }
            CHECK(seen.size() == gaussian_binomial(N, m));
        }
    }

    // frozen spot values for the counting oracle itself
    CHECK(gaussian_binomial(3, 1) == 7);
    CHECK(gaussian_binomial(3, 2) == 7);
    CHECK(gaussian_binomial(4, 1) == 15);
    CHECK(gaussian_binomial(4, 2) == 35);
    CHECK(gaussian_binomial(4, 3) == 15);
    CHECK(gaussian_binomial(6, 1) == 63);
    CHECK(gaussian_binomial(6, 2) == 651);
    CHECK(gaussian_binomial(6, 3) == 1395);

    CHECK_THROWS_AS(SubspaceEnumerator(4, 4, 2), CapExceeded);
    CHECK_THROWS_AS(SubspaceEnumerator(2, 2, 5), std::invalid_argument);
}

TEST_CASE("zero and full subspaces behave as the lattice extremes") {
    const Subspace zero(2, 3);
    CHECK(zero.dim() == 0);
    CHECK(zero.ambient_dim() == 6);
    CHECK(zero.contains(F2Matrix(2, 3)));
    CHECK_FALSE(zero.contains(F2Matrix::unit(2, 3, 1, 1)));

    const Subspace everything = Subspace::full(2, 3);
    CHECK(everything.dim() == 6);
    for (const F2Matrix& x : all_matrices(2, 3)) CHECK(everything.contains(x));
}
