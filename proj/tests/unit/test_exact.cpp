#include <random>

#include "doctest.h"
#include "pernloci/error.hpp"
#include "pernloci/exact.hpp"

using namespace pernloci;

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("3/6").str() == "1/2");
    CHECK(Rational::parse("-4/-8").str() == "1/2");
    CHECK(Rational::parse("-1.25") == Rational(-5) / Rational(4));
    CHECK(Rational::parse("3e-2") == Rational(3) / Rational(100));
    CHECK(Rational::parse("7").is_integer());
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("to_double rounds to nearest") {
    // IEEE division of exactly representable integers is correctly rounded.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
    for (int i = 0; i < 2000; ++i) {
        const long p = num(rng), q = den(rng);
        CHECK((Rational(p) / Rational(q)).to_double() == static_cast<double>(p) / static_cast<double>(q));
    }
    CHECK(Rational::parse("1/10").to_double() == 0.1);
    CHECK(Rational::from_double(0.1).to_double() == 0.1);
}

TEST_CASE("decimal round trip of doubles") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const cplx z(u(rng), u(rng));
        const ComplexVal back = parse_complex(format_complex(ComplexVal(z)));
        CHECK(back.value() == z);
    }
    CHECK(parse_complex("inf").is_inf());
    CHECK(parse_complex("1/4").value() == cplx(0.25, 0.0));
    CHECK(format_double(0.0) == "0");
    CHECK_THROWS_AS(parse_complex("1,2,3"), Error);
}

TEST_CASE("chordal metric") {
    CHECK(chordal(ComplexVal(cplx(0.0)), ComplexVal::infinity()) == doctest::Approx(2.0));
    CHECK(chordal(ComplexVal(cplx(1.0)), ComplexVal(cplx(-1.0))) == doctest::Approx(2.0));
    CHECK(chordal(ComplexVal::infinity(), ComplexVal::infinity()) == 0.0);
}

TEST_CASE("gaussian rationals") {
    const QComplex i(Rational(0), Rational(1));
    CHECK(i * i == QComplex(-1));
    CHECK((QComplex(1) / (QComplex(1) + i)) == QComplex(Rational(1) / Rational(2), Rational(-1) / Rational(2)));
}
