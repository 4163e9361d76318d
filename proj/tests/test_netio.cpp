#include "doctest.h"

#include <cstdint>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "wafom/errors.hpp"
#include "wafom/f2.hpp"
#include "wafom/netio.hpp"
#include "wafom/qmc.hpp"

using namespace wafom;

TEST_CASE("serialized form is the canonical basis in a fixed layout") {
    const Subspace p = canonicalize(2, 2, {F2Matrix::unit(2, 2, 1, 1),
                                           F2Matrix::unit(2, 2, 2, 2)});
    CHECK(net_to_string(p) == "2 2 2\n10\n00\n\n00\n01\n");

    CHECK(net_to_string(Subspace(2, 2)) == "2 2 0\n");
    CHECK(net_to_string(Subspace::full(1, 1)) == "1 1 1\n1\n");

    // equal subspaces from different generators serialize identically
    F2Matrix mixed = F2Matrix::unit(2, 2, 1, 1);
    mixed ^= F2Matrix::unit(2, 2, 2, 2);
    const Subspace q = canonicalize(2, 2, {mixed, F2Matrix::unit(2, 2, 2, 2)});
    CHECK(net_to_string(q) == net_to_string(p));
}

TEST_CASE("write then read restores the identical subspace") {
    std::mt19937_64 rng(5050);
    for (int trial = 0; trial < 30; ++trial) {
        const int s = 1 + static_cast<int>(rng() % 4);
        const int n = 1 + static_cast<int>(rng() % 5);
        const int m = static_cast<int>(rng() % (s * n + 1));
        const Subspace p = random_net(s, n, m, rng());
        CHECK(read_net_string(net_to_string(p)) == p);

        std::ostringstream out;
        write_net(out, p);
        std::istringstream in(out.str());
        CHECK(read_net(in) == p);
    }
}

TEST_CASE("file round trip") {
    const std::string path = "roundtrip_tmp.net";
    const Subspace p = random_net(2, 3, 4, 77);
    write_net_file(path, p);
    CHECK(read_net_file(path) == p);
    std::remove(path.c_str());

    CHECK_THROWS_WITH_AS(read_net_file("no_such_dir/missing.net"),
                         doctest::Contains("no_such_dir/missing.net"),
                         NetParseError);
}

TEST_CASE("reader canonicalizes dependent generator lists") {
    // third block is the XOR of the first two: rank stays 2
    const std::string text =
        "1 3 3\n"
        "110\n"
        "\n"
        "011\n"
        "\n"
        "101\n";
    const Subspace p = read_net_string(text);
    CHECK(p.dim() == 2);
    F2Matrix a(1, 3);
    a.set(1, 1, true);
    a.set(1, 2, true);
    F2Matrix b(1, 3);
    b.set(1, 2, true);
    b.set(1, 3, true);
    CHECK(p == canonicalize(1, 3, {a, b}));
}

TEST_CASE("malformed files are rejected with a parse error") {
    const char* bad[] = {
        "",                                  // empty
        "1 2 1\n10",                         // missing final newline
        "1 2 1\r\n10\r\n",                   // CR line endings
        "1 2\n",                             // short header
        "1 2 1 9\n10\n",                     // long header
        "1  2 1\n10\n",                      // double space
        "a 2 1\n10\n",                       // non-numeric
        "0 2 1\n10\n",                       // s = 0
        "1 2 1\n1\n",                        // row too short
        "1 2 1\n100\n",                      // row too long
        "1 2 1\n12\n",                       // digit out of alphabet
        "1 2 2\n10\n01\n",                   // missing blank separator
        "1 2 2\n10\n\n\n01\n",               // doubled blank separator
        "1 2 1\n10\n\n",                     // trailing blank line
        "1 2 1\n10\n01\n",                   // extra block
        "1 2 2\n10\n",                       // fewer blocks than announced
        "2 2 1\n10\n",                       // fewer rows than s
        " 1 2 1\n10\n",                      // leading space in header
        "1 2 1 \n10\n",                      // trailing space in header
    };
    for (const char* text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(read_net_string(text), NetParseError);
    }

    // near-misses of the above that must parse
    CHECK(read_net_string("1 2 1\n10\n").dim() == 1);
    CHECK(read_net_string("1 2 2\n10\n\n01\n").dim() == 2);
    CHECK(read_net_string("2 2 1\n10\n01\n").dim() == 1);
    CHECK(read_net_string("1 2 0\n").dim() == 0);
}
