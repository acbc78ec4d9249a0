#include <random>

#include "doctest.h"
#include "pernloci/pern.hpp"

using namespace pernloci;

namespace {

BivarPoly poly_bc(std::initializer_list<std::tuple<long, int, int>> terms) {
    BivarPoly p;
    for (const auto& [k, i, j] : terms) p += BivarPoly::monomial(k, i, j);
    return p;
}

Rational random_rational(std::mt19937_64& rng, long range = 40) {
    std::uniform_int_distribution<long> num(-range, range), den(1, range);
    return Rational(num(rng)) / Rational(den(rng));
}

}  // namespace

TEST_CASE("P_n / Q_n equals the orbit of 1") {
    std::mt19937_64 rng(1);
    const auto all = build_pern_upto(8);
    for (int trial = 0; trial < 30; ++trial) {
        const Rational b = random_rational(rng), c = random_rational(rng);
        if (c.is_zero()) continue;
        const QuadMap<Rational> f(b, c);
        Extended<Rational> z(Rational(1));
        for (int n = 2; n <= 8; ++n) {
            const auto& pp = all[static_cast<std::size_t>(n - 2)];
            const Rational P = pp.P.eval(b, c), Q = pp.Q.eval(b, c);
            if (z.is_inf()) {
                CHECK(Q.is_zero());
                break;
            }
            REQUIRE_FALSE(Q.is_zero());
            CHECK(P / Q == z.value());
            z = f(z);
        }
    }
}

TEST_CASE("reduced top parts, hand expanded") {
    const auto parts = reduced_parts_upto(6);
    CHECK(parts[2].first == poly_bc({{2, 1, 0}, {1, 0, 1}}));
    CHECK(parts[3].first == poly_bc({{2, 3, 0}, {4, 2, 1}, {3, 1, 2}, {1, 0, 3}}));
    CHECK(parts[4].first == poly_bc({{6, 3, 0}, {8, 2, 1}, {4, 1, 2}, {1, 0, 3}}));
    // p_red_5 = (b + c)(2b^2 + 2bc + c^2)
    CHECK(parts[3].first == poly_bc({{1, 1, 0}, {1, 0, 1}}) * poly_bc({{2, 2, 0}, {2, 1, 1}, {1, 0, 2}}));
    const auto full = build_pern(6);
    CHECK(full.p_red == parts[4].first);
    CHECK(full.q_red == parts[4].second);
    CHECK(full.p == full.P.top_part());
    CHECK(full.q == full.Q.top_part());
}

TEST_CASE("limits on n") {
    CHECK_THROWS_AS(build_pern(1), Error);
    CHECK_THROWS_AS(build_pern(21), Error);
    std::string warned;
    PernBuildOptions o;
    o.warn = [&](const std::string& w) { warned = w; };
    (void)reduced_parts_upto(16);
    CHECK(warned.empty());
}

TEST_CASE("asymptotic directions") {
    const auto d5 = asymptotic_directions(5);
    REQUIRE(d5.size() == 3);
    int inherited = 0;
    for (const auto& d : d5) {
        const bool minus_one = std::abs(d.alpha + 1.0) < 1e-10;
        const bool other = std::abs(d.alpha - cplx(-0.5, 0.5)) < 1e-10 || std::abs(d.alpha - cplx(-0.5, -0.5)) < 1e-10;
        CHECK((minus_one || other));
        CHECK(d.inherited() == minus_one);
        if (minus_one) CHECK(d.inherited_from == std::vector<int>{3});
        inherited += d.inherited();
    }
    CHECK(inherited == 1);
    const auto d4 = asymptotic_directions(4);
    REQUIRE(d4.size() == 1);
    CHECK(std::abs(d4[0].alpha + 0.5) < 1e-12);
}

TEST_CASE("Per_4 closed form") {
    const auto pt = per4_from_rho(Rational(2));
    CHECK(pt.b == Rational(-5));
    CHECK(pt.c == Rational(6));
    CHECK(pt.v.value() == Rational(-1) / Rational(24));
    CHECK(pt.v == pt.v_expanded);
    CHECK(pt.z_crit.value() == Rational(12) / Rational(5));
    CHECK(pt.in_per4_prime);
    for (const char* bad : {"0", "1", "1/2"}) CHECK_THROWS_AS(per4_from_rho(Rational::parse(bad)), Error);
    const auto fl = per4_from_rho(cplx(2.0, 0.0));
    CHECK(std::abs(fl.b + 5.0) < 1e-12);
    // a root of rho^2 - 3 rho + 1 puts v at 0
    const auto at_v0 = per4_from_rho(cplx((3.0 + std::sqrt(5.0)) / 2.0, 0.0));
    CHECK_FALSE(at_v0.in_per4_prime);
}

TEST_CASE("Per_3 fibers") {
    const auto fib = per3_fiber_exact(Rational(4) / Rational(3));
    REQUIRE(fib);
    std::vector<Rational> bs;
    for (const auto& f : fib->maps) {
        bs.push_back(f.b());
        CHECK(f.b() + f.c() == Rational(-1));
        CHECK(f.critical_value().value() == Rational(4) / Rational(3));
        const auto orb = orbit(f, Extended<Rational>(Rational(0)), 3);
        CHECK(orb[3] == orb[0]);
    }
    std::sort(bs.begin(), bs.end());
    CHECK(bs == std::vector<Rational>{Rational(-2) / Rational(3), Rational(2)});
    CHECK_FALSE(per3_fiber_exact(Rational(2)));  // 32 is not a square
    CHECK_THROWS_AS(per3_fiber_exact(Rational(1)), Error);
}

TEST_CASE("projectability inverts the first two orbit points") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational rho = random_rational(rng), s = random_rational(rng);
        if (rho == Rational(1) || rho.is_zero()) continue;
        std::pair<Rational, Rational> bc;
        try {
            bc = params_from_rho_s(rho, s);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Degenerate);
            continue;
        }
        const QuadMap<Rational> f(bc.first, bc.second);
        const auto r1 = f(Extended<Rational>(Rational(1)));
        CHECK(r1.value() == rho);
        CHECK(f(r1).value() == s);
    }
    try {
        params_from_rho_s(Rational(1), Rational(3));
        FAIL("expected SINGULAR");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Singular);
    }
}

TEST_CASE("Newton solve near asymptotic directions") {
    const auto d6 = asymptotic_directions(6);
    for (const auto& d : d6) {
        const auto r = solve_pern_near_direction(6, d.alpha, cplx(1e4, 0.0));
        CHECK(r.exact_period == 6);
        const auto chk = check_pern_prime(r.map(), 6, 1e-6);
        CHECK(chk.cycle_closes);
        CHECK(std::abs(r.b / r.c - d.alpha) < 0.05);
    }
    try {
        solve_pern_near_direction(5, cplx(-1.0, 0.0), cplx(1e4, 0.0));
        FAIL("expected WRONG_PERIOD");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WrongPeriod);
    }
    const auto r4 = solve_pern_near_direction(4, cplx(-0.5, 0.0), cplx(1e4, 0.0));
    CHECK(r4.exact_period == 4);
    CHECK(check_pern_prime(r4.map(), 4, 1e-9).cycle_closes);
}

TEST_CASE("Per_4 punctures") {
    const auto rep = per4_puncture_analysis();
    auto find = [&](const std::string& name) -> const PunctureReport& {
        for (const auto& r : rep)
            if (r.puncture == name) return r;
        FAIL("missing puncture " << name);
        return rep.front();
    };
    using Pairs = std::vector<std::pair<std::string, std::string>>;
    auto has = [](const Pairs& ps, const std::string& a, const std::string& b) {
        return std::any_of(ps.begin(), ps.end(), [&](const auto& p) {
            return (p.first == a && p.second == b) || (p.first == b && p.second == a);
        });
    };
    const auto p0 = find("rho=0").collision_pairs();
    CHECK(has(p0, "rho", "0"));
    CHECK(has(p0, "v", "inf"));
    const auto pinf = find("rho=inf");
    CHECK(has(pinf.collision_pairs(), "v", "rho"));
    CHECK(has(pinf.collision_pairs(), "v", "inf"));
    CHECK(pinf.asymptotics.find("-1/8") != std::string::npos);
    const auto [N, D] = per4_v_rational_function();
    // v(2) = -1/24
    CHECK(N.eval(Rational(2)) / D.eval(Rational(2)) == Rational(-1) / Rational(24));
}
