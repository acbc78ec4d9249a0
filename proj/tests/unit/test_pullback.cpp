#include "../oracles.hpp"
#include "doctest.h"
#include "pernloci/pern.hpp"
#include "pernloci/pullback.hpp"

using namespace pernloci;

namespace {

struct Setup {
    QuadMap<cplx> f{cplx(0.0), cplx(1.0)};
    MarkedSet A, B;
};

Setup rho100() {
    const auto pt = per4_from_rho(Rational(100));
    Setup s;
    s.f = pt.map().to_float();
    s.B = MarkedSet({{"0", ComplexVal(cplx(0.0))},
                     {"inf", ComplexVal::infinity()},
                     {"1", ComplexVal(cplx(1.0))},
                     {"rho", ComplexVal(cplx(100.0))},
                     {"v", to_complex_val(pt.v)}});
    s.A = s.B.subset({"0", "inf", "1", "rho"});
    return s;
}

PolyCurve image(const QuadMap<cplx>& f, const PolyCurve& c) {
    std::vector<cplx> v;
    for (const auto& z : c.vertices()) v.push_back(f(ComplexVal(z)).value());
    return PolyCurve(v);
}

}  // namespace

TEST_CASE("small loop around the critical value v lifts to one degree-2 curve") {
    const auto s = rho100();
    const cplx v = s.B.at("v").pos.value();
    const auto c = validate(circle_curve(v, 0.5, 48), s.B);
    const auto r = trace_preimage(s.f, c, s.A, s.B);
    CHECK(r.swap);
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].degree == 2);
    // It encircles the free critical point -2c/b.
    const cplx crit = s.f.crit2().value();
    CHECK(oracle::point_in_polygon(r.components[0].curve.vertices(), crit));
    CHECK(composition_error(s.f, r, c) < 1e-12);
}

TEST_CASE("loop away from critical values lifts to two degree-1 curves") {
    const auto s = rho100();
    const auto c = validate(circle_curve(cplx(0), 0.5, 48), s.B);
    const auto r = trace_preimage(s.f, c, s.A, s.B);
    CHECK_FALSE(r.swap);
    REQUIRE(r.components.size() == 2);
    for (const auto& comp : r.components) {
        CHECK(comp.degree == 1);
        // Each lift is a simple loop mapping onto the input.
        CHECK(is_simple(comp.curve.vertices()));
    }
    CHECK(composition_error(s.f, r, c) < 1e-12);
}

TEST_CASE("equalizing pair at rho = 100") {
    const auto s = rho100();
    const auto g1 = validate(circle_curve(cplx(0), 10.0, 64), s.B);
    const auto g = validate(image(s.f, g1), s.B);
    const auto cg = curve_word(g, s.B), cg1 = curve_word(g1, s.B);
    CHECK(class_equal(cg, cg1));
    CHECK(forget(cg, s.A).is_essential());
    const auto r = trace_preimage(s.f, g, s.A, s.B);
    CHECK_FALSE(r.swap);
    REQUIRE(r.components.size() == 2);
    int essential = 0, trivial = 0;
    for (const auto& comp : r.components) {
        essential += comp.essential();
        trivial += comp.cls.is_trivial();
        if (comp.essential()) CHECK(class_equal(comp.cls, forget(cg, s.A)));
    }
    CHECK(essential == 1);
    CHECK(trivial == 1);

    const Multicurve mc({{"gamma", g, cg}});
    const auto data = thurston_matrices(s.f, mc, s.A, s.B);
    CHECK(data.T.rows() == 1);
    CHECK(data.T(0, 0) == Rational(1));
    CHECK(data.I(0, 0) == Rational(1));
    const auto out = equalizing_solve(data);
    REQUIRE(out.certificate);
    CHECK(out.certificate->kind == "equalizing");
    CHECK(out.certificate->verified);
    CHECK(out.certificate->m == std::vector<Rational>{Rational(1)});
    const auto tw = twist_certificate(*out.certificate, data.component_degrees);
    CHECK(tw.str() == "T_gamma^1");
}

TEST_CASE("tracing needs both critical values in B") {
    const auto s = rho100();
    const auto c = validate(circle_curve(cplx(0), 0.5, 48), s.B);
    try {
        trace_preimage(s.f, c, s.A, s.A);
        FAIL("expected NOT_REDUCED");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotReduced);
    }
}

TEST_CASE("step underflow is reported") {
    const auto s = rho100();
    const auto c = validate(PolyCurve({cplx(-13, -1), cplx(0.5, -1), cplx(0.5, 1), cplx(-13, 1)}), s.B);
    TraceOptions o;
    o.step_fraction = 1e-9;
    o.max_bisections = 2;
    try {
        trace_preimage(s.f, c, s.A, s.B, o);
        FAIL("expected STEP_UNDERFLOW");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::StepUnderflow);
    }
}

TEST_CASE("equalizing solver on hand-made systems") {
    auto m11 = [](const char* t, const char* i) {
        RationalMatrix T(1, 1), I(1, 1);
        T(0, 0) = Rational::parse(t);
        I(0, 0) = Rational::parse(i);
        return equalizing_solve(T, I, {"a"});
    };
    CHECK(m11("1", "1").certificate);
    CHECK_FALSE(m11("1/2", "1").certificate);
    // Two curves: T = [[1/2, 1], [0, 0]], I = [[1, 0], [0, 0]] gives m = (2, 1). Without
    // component counts only the weighted condition is decided.
    RationalMatrix T(2, 2), I(2, 2);
    T(0, 0) = Rational(1) / Rational(2);
    T(0, 1) = Rational(1);
    I(0, 0) = Rational(1);
    const auto out = equalizing_solve(T, I, {"a", "b"});
    REQUIRE(out.certificate);
    CHECK(out.certificate->m == std::vector<Rational>{Rational(2), Rational(1)});
    CHECK(out.certificate->kind == "arithmetically equalizing");
    // One component of a over delta_0 and one of b, but only a forgets to it.
    RationalMatrix C(2, 2);
    C(0, 0) = Rational(1);
    C(0, 1) = Rational(1);
    CHECK(equalizing_solve(T, I, {"a", "b"}, false, C).certificate->kind == "arithmetically equalizing");
    RationalMatrix T1(1, 1), I1(1, 1), C1(1, 1);
    T1(0, 0) = I1(0, 0) = C1(0, 0) = Rational(1);
    CHECK(equalizing_solve(T1, I1, {"a"}, false, C1).certificate->kind == "equalizing");
    CHECK(equalizing_solve(RationalMatrix(0, 1), RationalMatrix(0, 1), {"a"}).certificate->kind == "equalizing");
    const auto tw = twist_certificate(*out.certificate, {{2}, {1}});
    CHECK(tw.scale == 1);
    const auto tw2 = twist_certificate(*out.certificate, {{4}, {3}});
    // L = (4, 3): lambda = lcm(4/gcd(4,2), 3/gcd(3,1)) = 6
    CHECK(tw2.scale == 6);
    // A single degree-2 preimage component forces the exponent up to 2.
    const auto one = equalizing_solve(RationalMatrix(0, 1), RationalMatrix(0, 1), {"g"});
    CHECK(twist_certificate(*one.certificate, {{2}}).str() == "T_g^2");
}

TEST_CASE("subset retry") {
    // Curve b alone is equalizing; the pair is not.
    RationalMatrix T(2, 2), I(2, 2);
    T(0, 0) = Rational(3);
    I(0, 0) = Rational(1);
    T(1, 1) = Rational(1);
    I(1, 1) = Rational(1);
    CHECK_FALSE(equalizing_solve(T, I, {"a", "b"}).certificate);
    const auto out = equalizing_solve(T, I, {"a", "b"}, true);
    REQUIRE(out.certificate);
    CHECK(out.from_subset);
    CHECK(out.certificate->labels == std::vector<std::string>{"b"});
}
