#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

namespace pernloci {

using BigInt = mpz_class;
using cplx = std::complex<double>;

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& v) : q_(v) {}
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "p", "p/q", and finite decimals such as "-1.25" or "3e-2".
    static Rational parse(std::string_view text);
    /// Exact binary value of a finite double.
    static Rational from_double(double v);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    /// Correctly rounded (nearest, ties to even).
    double to_double() const;
    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_{0};
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exp);

/// Complex number with exact rational parts.
struct QComplex {
    Rational re;
    Rational im;

    QComplex() = default;
    QComplex(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    QComplex(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
    QComplex(int r) : re(r) {}  // NOLINT(google-explicit-constructor)
    QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    QComplex conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }
    cplx to_cplx() const { return {re.to_double(), im.to_double()}; }
    std::string str() const;

    QComplex operator-() const { return {-re, -im}; }
    QComplex& operator+=(const QComplex& o) { re += o.re; im += o.im; return *this; }
    QComplex& operator-=(const QComplex& o) { re -= o.re; im -= o.im; return *this; }
    QComplex& operator*=(const QComplex& o);
    QComplex& operator/=(const QComplex& o);

    friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
    friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
    friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
    friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
    friend bool operator==(const QComplex& a, const QComplex& b) = default;
    friend std::ostream& operator<<(std::ostream& os, const QComplex& z) { return os << z.str(); }
};

// Field helpers used by templates that run over Rational, QComplex, and cplx.
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const QComplex& x) { return x.is_zero(); }
inline bool is_zero(const cplx& x) { return x == cplx(0.0, 0.0); }
inline cplx to_cplx(const Rational& x) { return {x.to_double(), 0.0}; }
inline cplx to_cplx(const QComplex& x) { return x.to_cplx(); }
inline cplx to_cplx(const cplx& x) { return x; }

template <class F>
inline constexpr bool is_exact_field_v = !std::is_same_v<F, cplx>;

/// A value of a field extended by a single point at infinity.
template <class F>
class Extended {
public:
    Extended() = default;
    Extended(F v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    static Extended infinity() {
        Extended e;
        e.inf_ = true;
        return e;
    }

    bool is_inf() const { return inf_; }
    bool is_finite() const { return !inf_; }
    /// Finite value; zero when the point is infinite.
    const F& value() const { return value_; }

    friend bool operator==(const Extended& a, const Extended& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.value_ == b.value_;
    }

private:
    F value_{};
    bool inf_ = false;
};

/// Complex double or the point at infinity of the Riemann sphere.
using ComplexVal = Extended<cplx>;
using ExactPoint = Extended<QComplex>;

/// Chordal distance on the Riemann sphere (diameter 2).
double chordal(const ComplexVal& a, const ComplexVal& b);

/// Decimal "re,im" with 17 significant digits, or "inf".
std::string format_complex(const ComplexVal& z);
std::string format_double(double x);
/// Parses "re,im", "re", or "inf".
ComplexVal parse_complex(std::string_view text);

inline ComplexVal to_complex_val(const Extended<Rational>& z) {
    return z.is_inf() ? ComplexVal::infinity() : ComplexVal(to_cplx(z.value()));
}
inline ComplexVal to_complex_val(const Extended<QComplex>& z) {
    return z.is_inf() ? ComplexVal::infinity() : ComplexVal(to_cplx(z.value()));
}
inline ComplexVal to_complex_val(const ComplexVal& z) { return z; }

}  // namespace pernloci
