#include <random>

#include "doctest.h"
#include "pernloci/poly.hpp"
#include "pernloci/roots.hpp"

using namespace pernloci;

namespace {

UniPoly lin(long a0, long a1) { return UniPoly({BigInt(a0), BigInt(a1)}); }

BivarPoly random_poly(std::mt19937_64& rng, int max_deg, int terms, bool homogeneous, int bits) {
    BivarPoly p;
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> small(-50, 50);
    for (int t = 0; t < terms; ++t) {
        const int i = deg(rng);
        const int j = homogeneous ? max_deg - i : deg(rng);
        BigInt k = small(rng);
        for (int s = 0; s < bits / 32; ++s) k = k * BigInt(4294967291u) + small(rng);
        p += BivarPoly::monomial(k, i, j);
    }
    return p;
}

}  // namespace

TEST_CASE("univariate gcd and square-free decomposition") {
    const UniPoly a = lin(-1, 1) * lin(2, 1);
    const UniPoly b = lin(-1, 1) * lin(-3, 1);
    CHECK(gcd(a, b) == lin(-1, 1));
    CHECK(gcd(lin(1, 2), lin(1, 3)).degree() == 0);
    const auto sq = squarefree_decomposition(lin(-1, 1) * lin(-1, 1) * lin(1, 1));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0] == std::make_pair(lin(1, 1), 1));
    CHECK(sq[1] == std::make_pair(lin(-1, 1), 2));
    CHECK(exact_quotient(a, lin(2, 1)) == lin(-1, 1));
    CHECK_THROWS(exact_quotient(a, lin(5, 1)));
}

TEST_CASE("root finder on known roots") {
    // (t - 1)(t + 2)(t^2 + 1)
    const UniPoly p = lin(-1, 1) * lin(2, 1) * UniPoly({BigInt(1), BigInt(0), BigInt(1)});
    const auto r = roots_with_multiplicity(p);
    REQUIRE(r.size() == 4);
    for (const cplx want : {cplx(1, 0), cplx(-2, 0), cplx(0, 1), cplx(0, -1)}) {
        CHECK(std::any_of(r.begin(), r.end(), [&](const auto& x) { return std::abs(x.value - want) < 1e-12; }));
    }
    const auto d = roots_with_multiplicity(lin(3, 1) * lin(3, 1) * lin(3, 1));
    REQUIRE(d.size() == 1);
    CHECK(d[0].multiplicity == 3);
}

TEST_CASE("product algorithms agree") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const bool hom = trial % 2 == 0;
        const int bits = (trial % 4) * 64;
        const auto a = random_poly(rng, 12, 30, hom, bits);
        const auto b = random_poly(rng, 9, 25, hom, bits);
        const auto ref = multiply_schoolbook(a, b);
        CHECK(multiply_kronecker(a, b) == ref);
        CHECK(a * b == ref);
        CHECK(multiply_kronecker(-a, b) == -ref);
    }
}

TEST_CASE("packed quadratic step matches the recursion") {
    std::mt19937_64 rng(5);
    const auto b = BivarPoly::var_b(), c = BivarPoly::var_c();
    for (int trial = 0; trial < 20; ++trial) {
        const auto P = random_poly(rng, 10, 40, false, 64 * (trial % 3));
        const auto Q = random_poly(rng, 10, 40, false, 64 * (trial % 3));
        const auto [P2, Q2] = quadratic_step(P, Q);
        CHECK(P2 == multiply_schoolbook(P, P) + multiply_schoolbook(b, multiply_schoolbook(P, Q)) +
                        multiply_schoolbook(c, multiply_schoolbook(Q, Q)));
        CHECK(Q2 == multiply_schoolbook(P, P));
    }
}

TEST_CASE("bivariate evaluation and structure") {
    // (b + 2c)^2 = b^2 + 4bc + 4c^2
    const auto p = (BivarPoly::var_b() + BigInt(2) * BivarPoly::var_c()).pow(2);
    CHECK(p.coeff(1, 1) == 4);
    CHECK(p.is_homogeneous());
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(3), Rational(-1)) == Rational(1));
    CHECK(p.dehomogenize() == UniPoly({BigInt(4), BigInt(4), BigInt(1)}));
    CHECK(p.str() == "b^2 + 4*b*c + 4*c^2");
    const auto q = BivarPoly::var_c().pow(2) * (BivarPoly::var_b() + BivarPoly::var_c());
    CHECK_FALSE(homogeneous_coprime(p * BivarPoly::var_c(), q));
    CHECK(homogeneous_coprime(p, BivarPoly::var_b() + BivarPoly::var_c()));
    CHECK_THROWS(dehomogenized_gcd(p + BivarPoly::constant(1), p));
}
