#include <random>

#include "../oracles.hpp"
#include "doctest.h"
#include "pernloci/linalg.hpp"

using namespace pernloci;

namespace {

RationalMatrix mat(std::size_t r, std::size_t c, std::initializer_list<const char*> xs) {
    RationalMatrix m(r, c);
    std::size_t k = 0;
    for (const char* x : xs) {
        m(k / c, k % c) = Rational::parse(x);
        ++k;
    }
    return m;
}

}  // namespace

TEST_CASE("nullspace") {
    const auto m = mat(2, 3, {"1", "2", "3", "2", "4", "6"});
    const auto ns = nullspace(m);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) {
        for (const auto& x : m.apply(v)) CHECK(x.is_zero());
        for (const auto& x : v) CHECK(x.is_integer());
    }
    CHECK(nullspace(mat(2, 2, {"1", "0", "0", "1"})).empty());
    CHECK(nullspace(RationalMatrix(0, 2)).size() == 2);
}

TEST_CASE("random nullspaces have the right dimension") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> e(-3, 3);
    for (int t = 0; t < 100; ++t) {
        // Rank-deficient by construction: the last column is a combination of the first two.
        RationalMatrix m(3, 4);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rational(e(rng)) / Rational(2);
            m(i, 3) = m(i, 0) * Rational(2) - m(i, 1);
        }
        const auto ns = nullspace(m);
        CHECK(ns.size() >= 1);
        for (const auto& v : ns)
            for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    }
}

TEST_CASE("Fourier-Motzkin") {
    // y1 >= 1, y2 >= 1, y1 + y2 <= 3
    std::vector<Inequality> sys = {{{Rational(1), Rational(0)}, Rational(1)},
                                   {{Rational(0), Rational(1)}, Rational(1)},
                                   {{Rational(-1), Rational(-1)}, Rational(-3)}};
    const auto y = fourier_motzkin(sys, 2);
    REQUIRE(y);
    CHECK((*y)[0] >= Rational(1));
    CHECK((*y)[1] >= Rational(1));
    CHECK((*y)[0] + (*y)[1] <= Rational(3));
    sys.push_back({{Rational(1), Rational(1)}, Rational(4)});
    CHECK_FALSE(fourier_motzkin(sys, 2));
}

TEST_CASE("coprime scaling") {
    const std::vector<Rational> v = {Rational(2) / Rational(3), Rational(-4) / Rational(9)};
    CHECK(to_coprime_integers(v) == std::vector<Rational>{Rational(3), Rational(-2)});
}
