#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symki/matrix.hpp"
#include "symki/polynomial.hpp"

using namespace symki;
using namespace symki::exact;
using namespace symki::poly;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == ZPoly{-1, 1});
    CHECK(cyclotomic(2) == ZPoly{1, 1});
    CHECK(cyclotomic(3) == ZPoly{1, 1, 1});
    CHECK(cyclotomic(5) == ZPoly{1, 1, 1, 1, 1});
    CHECK(cyclotomic(9) == ZPoly{1, 0, 0, 1, 0, 0, 1});
    CHECK(cyclotomic(12) == ZPoly{1, 0, -1, 0, 1});
    CHECK(cyclotomic(27) == ZPoly{1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("polynomial division and xgcd") {
    QPoly a = qpoly_from(ZPoly{-1, 0, 0, 0, 0, 1});  // x^5 - 1
    QPoly b = qpoly_from(ZPoly{-1, 1});               // x - 1
    auto [q, r] = divmod(a, b);
    CHECK(r.empty());
    CHECK(q == qpoly_from(ZPoly{1, 1, 1, 1, 1}));

    // gcd(x^2 - 1, x^2 - 2x + 1) = x - 1 with Bezout certificate
    QPoly f = qpoly_from(ZPoly{-1, 0, 1});
    QPoly g = qpoly_from(ZPoly{1, -2, 1});
    auto res = xgcd(f, g);
    CHECK(res.g == qpoly_from(ZPoly{-1, 1}));
    CHECK(add(mul(res.u, f), mul(res.v, g)) == res.g);
}

TEST_CASE("resultants") {
    // Res(x^2+1, x-2) = 5
    CHECK(resultant(ZPoly{1, 0, 1}, ZPoly{-2, 1}) == 5);
    // Res(Phi_5, x - 1) = Phi_5(1) = 5
    CHECK(resultant(cyclotomic(5), ZPoly{-1, 1}) == 5);
    // Res(Phi_q, x) = Phi_q(0) = 1 for q = 9
    CHECK(resultant(cyclotomic(9), ZPoly{0, 1}) == 1);
}

TEST_CASE("determinants") {
    IntMatrix a(2, 2);
    a.at(0, 0) = 0;
    a.at(0, 1) = -1;
    a.at(1, 0) = 1;
    a.at(1, 1) = 0;
    CHECK(a.det() == 1);

    IntMatrix b(3, 3);
    int vals[3][3] = {{2, 0, 1}, {1, 3, 2}, {1, 1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b.at(i, j) = vals[i][j];
    CHECK(b.det() == 6);  // cofactor expansion by hand

    IntMatrix c(3, 3);
    int vals2[3][3] = {{2, 0, 1}, {1, 3, 2}, {1, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c.at(i, j) = vals2[i][j];
    CHECK(c.det() == 0);  // singular
}

TEST_CASE("smith normal form of a known matrix") {
    IntMatrix a(2, 2);
    a.at(0, 0) = 2;
    a.at(0, 1) = 4;
    a.at(1, 0) = 6;
    a.at(1, 1) = 8;
    SmithForm f = smith_normal_form(a);
    CHECK(f.diagonal == std::vector<Integer>{2, 4});
    CHECK(f.verify(a));
}

TEST_CASE("smith normal form on random matrices verifies exactly") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t m = dim(rng), n = dim(rng);
        IntMatrix a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = entry(rng);
        SmithForm f = smith_normal_form(a);
        CHECK(f.verify(a));
        for (std::size_t k = 0; k + 1 < f.diagonal.size(); ++k) {
            if (f.diagonal[k + 1] == 0) continue;
            CHECK(f.diagonal[k] != 0);
            CHECK(f.diagonal[k + 1] % f.diagonal[k] == 0);
        }
    }
}
