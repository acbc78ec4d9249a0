#include "pernloci/exact.hpp"

#include <bit>
#include <cctype>
#include <cstdint>
#include <cmath>
#include <cstdio>
#include <limits>

#include "pernloci/error.hpp"

namespace pernloci {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw Error(ErrorCode::Parse, "empty number in '" + std::string(whole) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw Error(ErrorCode::Parse, "bad number '" + std::string(whole) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error(ErrorCode::Parse, "bad number '" + std::string(whole) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        return Rational(parse_integer(trim(s.substr(0, slash)), text),
                        parse_integer(trim(s.substr(slash + 1)), text));
    }
    // decimal with optional exponent
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        BigInt e_val = parse_integer(s.substr(e + 1), text);
        if (!e_val.fits_slong_p() || abs(e_val) > 100000)
            throw Error(ErrorCode::Parse, "exponent out of range in '" + std::string(text) + "'");
        exp10 = e_val.get_si();
        s = s.substr(0, e);
    }
    bool negative = !s.empty() && s.front() == '-';
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    std::string mantissa;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view frac = s.substr(dot + 1);
        mantissa = "0" + std::string(s.substr(0, dot)) + std::string(frac);
        exp10 -= static_cast<long>(frac.size());
    } else {
        mantissa = std::string(s);
    }
    if (negative) mantissa.insert(mantissa.begin(), '-');
    BigInt m = parse_integer(mantissa, text);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    return exp10 >= 0 ? Rational(BigInt(m * scale)) : Rational(m, scale);
}

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite double");
    mpq_class q(v);
    return Rational(q);
}

double Rational::to_double() const {
    // get_d truncates; step to whichever neighbour is nearest.
    const double d = q_.get_d();
    if (!std::isfinite(d)) return d;
    double best = d;
    mpq_class best_err = abs(mpq_class(d) - q_);
    for (double cand : {std::nextafter(d, -INFINITY), std::nextafter(d, INFINITY)}) {
        if (!std::isfinite(cand)) continue;
        const mpq_class err = abs(mpq_class(cand) - q_);
        if (err < best_err || (err == best_err && (std::bit_cast<std::uint64_t>(cand) & 1u) == 0)) {
            best = cand;
            best_err = err;
        }
    }
    return best;
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exp) {
    Rational result(1);
    Rational b = base;
    while (exp) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

QComplex& QComplex::operator*=(const QComplex& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

QComplex& QComplex::operator/=(const QComplex& o) {
    Rational n = o.norm();
    if (n.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

std::string QComplex::str() const {
    if (im.is_zero()) return re.str();
    return re.str() + "," + im.str();
}

double chordal(const ComplexVal& a, const ComplexVal& b) {
    if (a.is_inf() && b.is_inf()) return 0.0;
    if (a.is_inf() || b.is_inf()) {
        const cplx& z = a.is_inf() ? b.value() : a.value();
        return 2.0 / std::sqrt(1.0 + std::norm(z));
    }
    const cplx& z = a.value();
    const cplx& w = b.value();
    return 2.0 * std::abs(z - w) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

std::string format_double(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex(const ComplexVal& z) {
    if (z.is_inf()) return "inf";
    return format_double(z.value().real()) + "," + format_double(z.value().imag());
}

ComplexVal parse_complex(std::string_view text) {
    std::string_view s = trim(text);
    if (s == "inf" || s == "infinity" || s == "∞") return ComplexVal::infinity();
    auto to_d = [&](std::string_view part) {
        std::string p(trim(part));
        char* end = nullptr;
        double v = std::strtod(p.c_str(), &end);
        if (p.empty() || end != p.c_str() + p.size() || !std::isfinite(v)) {
            if (p.find('/') != std::string::npos) {
                try {
                    return Rational::parse(p).to_double();
                } catch (const Error&) {
                }
            }
            throw Error(ErrorCode::Parse, "bad complex number '" + std::string(text) + "'");
        }
        return v;
    };
    if (auto comma = s.find(','); comma != std::string_view::npos)
        return ComplexVal(cplx(to_d(s.substr(0, comma)), to_d(s.substr(comma + 1))));
    return ComplexVal(cplx(to_d(s), 0.0));
}

}  // namespace pernloci
