#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pernloci/exact.hpp"

namespace pernloci {

/// Dense univariate polynomial with integer coefficients, lowest degree first.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigInt> coeffs);
    static UniPoly constant(const BigInt& c) { return UniPoly({c}); }
    static UniPoly monomial(const BigInt& c, int degree);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : BigInt(0); }
    const BigInt& leading() const { return c_.back(); }

    BigInt content() const;
    /// Divides by the content and makes the leading coefficient positive.
    UniPoly primitive() const;
    UniPoly derivative() const;

    cplx eval(const cplx& t) const;
    Rational eval(const Rational& t) const;
    /// Sum of |a_i| |t|^i, the natural scale for a relative residual.
    double abs_eval(double abs_t) const;

    std::string str(const char* var = "t") const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const BigInt& k, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

private:
    void trim();
    std::vector<BigInt> c_;
};

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b);
/// Quotient of an exact division over the integers; throws if b does not divide a.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);
/// True if b divides a over the rationals.
bool divides(const UniPoly& b, const UniPoly& a);
/// Primitive gcd with positive leading coefficient, via subresultant remainder sequences.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Square-free decomposition a = c * prod f_i^i (Yun); returns (f_i, i) for non-constant f_i.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& a);

/// Exponent pair (i, j) of the monomial b^i c^j.
struct Exponent {
    int b = 0;
    int c = 0;
    int total() const { return b + c; }
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Sparse polynomial in (b, c) with integer coefficients. No zero coefficient is stored.
class BivarPoly {
public:
    using TermMap = std::map<Exponent, BigInt>;

    BivarPoly() = default;
    static BivarPoly constant(const BigInt& k);
    static BivarPoly monomial(const BigInt& k, int b_exp, int c_exp);
    static BivarPoly var_b() { return monomial(1, 1, 0); }
    static BivarPoly var_c() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    BigInt coeff(int b_exp, int c_exp) const;

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    BivarPoly homogeneous_part(int degree) const;
    /// Highest-degree homogeneous part.
    BivarPoly top_part() const { return homogeneous_part(degree()); }
    /// Smallest exponent of c over all terms (0 for the zero polynomial).
    int min_c_exponent() const;
    /// Bit length of the largest coefficient.
    std::size_t max_coeff_bits() const;

    /// Substitutes b = t, c = 1.
    UniPoly dehomogenize() const;

    template <class F>
    F eval(const F& b, const F& c) const;

    /// Canonical text: terms by total degree descending, then b-exponent descending.
    std::string str() const;

    BivarPoly operator-() const;
    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BigInt& k, const BivarPoly& a);
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) = default;

    BivarPoly shifted(int b_exp, int c_exp) const;
    BivarPoly pow(unsigned e) const;

private:
    void add_term(const Exponent& e, const BigInt& k);
    TermMap terms_;
};

/// Schoolbook product, exposed for cross-checking the packed-integer product.
BivarPoly multiply_schoolbook(const BivarPoly& a, const BivarPoly& b);
/// Product through Kronecker substitution into one GMP integer multiplication.
BivarPoly multiply_kronecker(const BivarPoly& a, const BivarPoly& b);

/// (P^2 + b P Q + c Q^2, P^2) from three squarings in one packed layout.
std::pair<BivarPoly, BivarPoly> quadratic_step(const BivarPoly& P, const BivarPoly& Q);

/// gcd of p(t, 1) and q(t, 1) for homogeneous p, q; throws NON_HOMOGENEOUS.
UniPoly dehomogenized_gcd(const BivarPoly& p, const BivarPoly& q);
/// Homogeneous coprimality: trivial dehomogenized gcd and no common power of c.
bool homogeneous_coprime(const BivarPoly& p, const BivarPoly& q);

template <class F>
F BivarPoly::eval(const F& b, const F& c) const {
    // Horner in c inside each b-power, then Horner in b.
    if (terms_.empty()) return F(0);
    std::map<int, std::vector<std::pair<int, const BigInt*>>> by_b;
    for (const auto& [e, k] : terms_) by_b[e.b].push_back({e.c, &k});
    auto lift = [](const BigInt& k) -> F {
        if constexpr (std::is_same_v<F, cplx>) {
            return F(k.get_d(), 0.0);
        } else {
            return F(Rational(k));
        }
    };
    auto power = [](F base, int e) {
        F r(1);
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    };
    F result(0);
    int prev_b = -1;
    for (auto it = by_b.rbegin(); it != by_b.rend(); ++it) {
        const auto& [b_exp, row] = *it;
        if (prev_b >= 0) result = result * power(b, prev_b - b_exp);
        F inner(0);
        int prev_c = -1;
        for (auto jt = row.rbegin(); jt != row.rend(); ++jt) {
            if (prev_c >= 0) inner = inner * power(c, prev_c - jt->first);
            inner = inner + lift(*jt->second);
            prev_c = jt->first;
        }
        inner = inner * power(c, prev_c);
        result = result + inner;
        prev_b = b_exp;
    }
    return result * power(b, prev_b);
}

}  // namespace pernloci
