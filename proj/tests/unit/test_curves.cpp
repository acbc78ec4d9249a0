#include <random>

#include "../oracles.hpp"
#include "doctest.h"
#include "pernloci/curves.hpp"
#include "pernloci/pern.hpp"

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

Word letters(const MarkedSet& m, std::initializer_list<std::pair<const char*, int>> w) {
    Word out;
    for (const auto& [label, e] : w) {
        const int g = static_cast<int>(*m.index_of(label)) + 1;
        for (int k = 0; k < std::abs(e); ++k) out.push_back(e > 0 ? g : -g);
    }
    return out;
}

PolyCurve rect(double x0, double y0, double x1, double y1) {
    return PolyCurve({cplx(x0, y0), cplx(x1, y0), cplx(x1, y1), cplx(x0, y1)});
}

}  // namespace

TEST_CASE("orientation predicate is exact") {
    // Nearly collinear points where naive evaluation loses the sign.
    const cplx a(0.5, 0.5), b(12.0, 12.0), c(24.0, 24.0);
    CHECK(orient2d(a, b, c) == 0);
    const cplx c2(24.0, std::nextafter(24.0, 25.0));
    CHECK(orient2d(a, b, c2) == 1);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const cplx p(u(rng), u(rng)), q(u(rng), u(rng));
        const double t = std::abs(u(rng));
        const cplx r = p + t * (q - p);  // rounded, so only approximately on the line
        const Rational det = (Rational::from_double(q.real()) - Rational::from_double(p.real())) *
                                 (Rational::from_double(r.imag()) - Rational::from_double(p.imag())) -
                             (Rational::from_double(q.imag()) - Rational::from_double(p.imag())) *
                                 (Rational::from_double(r.real()) - Rational::from_double(p.real()));
        CHECK(orient2d(p, q, r) == det.sign());
    }
}

TEST_CASE("simplicity and segment tests") {
    CHECK(is_simple(rect(0, 0, 1, 1).vertices()));
    CHECK_FALSE(is_simple({cplx(0, 0), cplx(1, 1), cplx(1, 0), cplx(0, 1)}));
    CHECK_FALSE(is_simple({cplx(0, 0), cplx(2, 0), cplx(1, 0), cplx(1, 1)}));
    CHECK(segments_intersect(cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(2, 5)));
    CHECK_FALSE(segments_intersect(cplx(0, 0), cplx(1, 0), cplx(0, 1), cplx(1, 1)));
    CHECK_THROWS_AS(PolyCurve({cplx(0, 0), cplx(1, 0)}), Error);
    CHECK_THROWS_AS(circle_curve(cplx(0), 1.0, 2), Error);
}

TEST_CASE("validation against marked points") {
    const auto s = rho100();
    CHECK_THROWS_AS(validate(rect(-1, 0, 2, 1), s.B), Error);  // passes through 0
    try {
        validate(PolyCurve({cplx(-1, -1), cplx(2, 2), cplx(2, -1), cplx(-1, 2)}), s.B);
        FAIL("expected NON_SIMPLE");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonSimple);
    }
    const auto ok = validate(circle_curve(cplx(0), 10.0, 64), s.B);
    REQUIRE(ok.min_clearance());
    CHECK(*ok.min_clearance() > 1.0);
}

TEST_CASE("words and classification") {
    CHECK(free_reduce({1, 2, -2, 3}) == Word{1, 3});
    CHECK(cyclic_reduce({-1, 2, 3, 1}) == Word{2, 3});
    CHECK(cyclically_equivalent({1, 2}, {2, 1}));
    CHECK(cyclically_equivalent({1, 2}, {-1, -2}));
    CHECK_FALSE(cyclically_equivalent({1, 2}, {1, -2}));

    const auto s = rho100();
    const auto small0 = curve_word(validate(circle_curve(cplx(0), 0.5, 32), s.B), s.B);
    CHECK(small0.is_peripheral());
    CHECK(small0.peripheral_label() == "0");
    const auto trivial = curve_word(validate(circle_curve(cplx(50, 50), 1.0, 32), s.B), s.B);
    CHECK(trivial.is_trivial());
    CHECK(trivial.word_string() == "1");

    // Rectangle around 0 and v: hand-traced crossings read x_v x_0.
    const auto d = curve_word(validate(rect(-14, -1, 0.5, 1), s.B), s.B);
    CHECK(d.is_essential());
    CHECK(cyclically_equivalent(d.word(), letters(s.B, {{"v", 1}, {"0", 1}})));
    CHECK(oracle::sorted(d.inside()) == std::vector<std::string>{"0", "v"});

    // A curve around every finite point is peripheral about infinity.
    const auto big = curve_word(validate(circle_curve(cplx(40, 0), 80.0, 128), s.B), s.B);
    CHECK(big.is_peripheral());
    CHECK(big.peripheral_label() == "inf");
}

TEST_CASE("inside set matches ray casting") {
    const auto s = rho100();
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> cx(-20, 110), r(0.3, 70);
    int checked = 0;
    for (int i = 0; i < 300 && checked < 100; ++i) {
        const cplx centre(cx(rng), cx(rng) / 4);
        PolyCurve c;
        try {
            c = validate(circle_curve(centre, r(rng), 48), s.B);
        } catch (const Error&) {
            continue;
        }
        const auto cls = curve_word(c, s.B);
        CHECK(oracle::sorted(cls.inside()) == oracle::enclosed_labels(c.vertices(), s.B));
        for (const auto& p : s.B.points()) {
            if (p.pos.is_inf()) continue;
            CHECK((winding_number(c.vertices(), p.pos.value()) != 0) == oracle::point_in_polygon(c.vertices(), p.pos.value()));
        }
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("forget and class equality") {
    const auto s = rho100();
    const auto d = curve_word(validate(rect(-14, -1, 0.5, 1), s.B), s.B);
    const auto fd = forget(d, s.A);
    CHECK(fd.is_peripheral());
    CHECK(fd.peripheral_label() == "0");
    CHECK_THROWS_AS(class_equal(d, fd), Error);
    try {
        forget(fd, s.B);
        FAIL("expected NOT_SUBSET");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSubset);
    }
    const auto g1 = curve_word(validate(circle_curve(cplx(0), 10.0, 64), s.B), s.B);
    const auto g1b = curve_word(validate(circle_curve(cplx(0.3, 0.2), 9.0, 17), s.B), s.B);
    CHECK(class_equal(g1, g1b));
    CHECK_FALSE(class_equal(g1, d));
}

TEST_CASE("multicurves") {
    const auto s = rho100();
    auto lc = [&](const std::string& l, const PolyCurve& c) {
        const auto v = validate(c, s.B);
        return LabelledCurve{l, v, curve_word(v, s.B)};
    };
    const auto g = lc("g", circle_curve(cplx(0), 5.0, 64));
    const auto far = lc("far", PolyCurve({cplx(-16, -20), cplx(105, -20), cplx(105, 5), cplx(95, 5), cplx(95, -15),
                                                cplx(-10, -15), cplx(-10, 5), cplx(-16, 5)}));
    const auto cut = lc("cut", rect(-14, -1, 0.5, 1));
    CHECK_NOTHROW(Multicurve({g, far}));
    CHECK_THROWS_AS(Multicurve({g, cut}), Error);
    CHECK_THROWS_AS(Multicurve({g, lc("g2", circle_curve(cplx(0), 6.0, 64))}), Error);
    CHECK_THROWS_AS(Multicurve({lc("t", circle_curve(cplx(50, 50), 1.0, 16))}), Error);
    CHECK(disjoint(g.curve, far.curve));
    CHECK_FALSE(disjoint(g.curve, cut.curve));
}

TEST_CASE("mobius rechart preserves the class") {
    const auto s = rho100();
    const auto c = validate(rect(-14, -1, 0.5, 1), s.B);
    const cplx p(30.0, 7.0);
    const auto B2 = mobius_rechart(s.B, p);
    const auto c2 = validate(mobius_rechart(c.refined().refined().refined(), p), B2);
    const auto w1 = curve_word(c, s.B), w2 = curve_word(c2, B2);
    // p lies outside the curve, so the image of its interior stays bounded.
    CHECK(w1.kind() == w2.kind());
    CHECK(oracle::sorted(w1.inside()) == oracle::sorted(w2.inside()));
}
