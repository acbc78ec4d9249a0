#include "pernloci/poly.hpp"

#include <gmp.h>

#include <algorithm>
#include <sstream>

#include "pernloci/error.hpp"

namespace pernloci {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const BigInt& c, int degree) {
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, BigInt(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt UniPoly::content() const {
    BigInt g = 0;
    for (const auto& k : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    return g;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (leading() < 0) g = -g;
    std::vector<BigInt> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return UniPoly(std::move(v));
}

cplx UniPoly::eval(const cplx& t) const {
    cplx r(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + it->get_d();
    return r;
}

Rational UniPoly::eval(const Rational& t) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + Rational(*it);
    return r;
}

double UniPoly::abs_eval(double abs_t) const {
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * abs_t + std::abs(it->get_d());
    return r;
}

std::string UniPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& k = c_[static_cast<std::size_t>(i)];
        if (k == 0) continue;
        BigInt a = abs(k);
        if (first) {
            if (k < 0) os << "-";
        } else {
            os << (k < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || a != 1) os << a.get_str() << (i > 0 ? "*" : "");
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

UniPoly UniPoly::operator-() const {
    std::vector<BigInt> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return UniPoly(std::move(v));
}

UniPoly operator*(const BigInt& k, const UniPoly& a) {
    std::vector<BigInt> v(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = k * a.c_[i];
    return UniPoly(std::move(v));
}

UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "pseudo-remainder by zero polynomial");
    std::vector<BigInt> r = a.coeffs();
    const int db = b.degree();
    const BigInt& lb = b.leading();
    int dr = a.degree();
    int steps = std::max(0, a.degree() - db + 1);
    while (dr >= db && dr >= 0) {
        BigInt lr = r[static_cast<std::size_t>(dr)];
        for (auto& k : r) k *= lb;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(dr - db + i)] -= lr * b.coeffs()[static_cast<std::size_t>(i)];
        --steps;
        while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
        r.resize(static_cast<std::size_t>(dr + 1));
    }
    UniPoly rem(std::move(r));
    if (steps > 0) {
        BigInt scale;
        mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
        rem = scale * rem;
    }
    return rem;
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
    if (a.is_zero()) return {};
    std::vector<BigInt> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1), BigInt(0));
    for (int i = a.degree(); i >= db; --i) {
        BigInt& top = r[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t()))
            throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
        BigInt k;
        mpz_divexact(k.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
        q[static_cast<std::size_t>(i - db)] = k;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= k * b.coeffs()[static_cast<std::size_t>(j)];
    }
    for (const auto& k : r) {
        if (k != 0) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
    }
    return UniPoly(std::move(q));
}

bool divides(const UniPoly& b, const UniPoly& a) { return pseudo_remainder(a, b).is_zero(); }

UniPoly gcd(const UniPoly& a_in, const UniPoly& b_in) {
    if (a_in.is_zero()) return b_in.primitive();
    if (b_in.is_zero()) return a_in.primitive();
    UniPoly a = a_in.primitive();
    UniPoly b = b_in.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    BigInt g = 1;
    BigInt h = 1;
    while (true) {
        const int d = a.degree() - b.degree();
        UniPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) return b.primitive();
        if (r.degree() == 0) return UniPoly::constant(1);
        BigInt hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(d));
        BigInt divisor = g * hd;
        std::vector<BigInt> rc = r.coeffs();
        for (auto& k : rc) mpz_divexact(k.get_mpz_t(), k.get_mpz_t(), divisor.get_mpz_t());
        a = std::move(b);
        b = UniPoly(std::move(rc));
        g = a.leading();
        if (d >= 1) {
            BigInt gd, hd1;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(d));
            mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(d - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
        }
    }
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& a_in) {
    std::vector<std::pair<UniPoly, int>> out;
    if (a_in.degree() <= 0) return out;
    UniPoly a = a_in.primitive();
    UniPoly b = a.derivative();
    UniPoly c = gcd(a, b);
    UniPoly w = exact_quotient(a, c);
    UniPoly y = exact_quotient(b, c);
    UniPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        UniPoly g = gcd(w, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        w = exact_quotient(w, g);
        y = exact_quotient(z, g);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------- BivarPoly

BivarPoly BivarPoly::constant(const BigInt& k) { return monomial(k, 0, 0); }

BivarPoly BivarPoly::monomial(const BigInt& k, int b_exp, int c_exp) {
    BivarPoly p;
    if (k != 0) p.terms_.emplace(Exponent{b_exp, c_exp}, k);
    return p;
}

BigInt BivarPoly::coeff(int b_exp, int c_exp) const {
    auto it = terms_.find(Exponent{b_exp, c_exp});
    return it == terms_.end() ? BigInt(0) : it->second;
}

int BivarPoly::degree() const {
    int d = -1;
    for (const auto& [e, k] : terms_) d = std::max(d, e.total());
    return d;
}

bool BivarPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.total();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.total() == d; });
}

BivarPoly BivarPoly::homogeneous_part(int degree) const {
    BivarPoly p;
    for (const auto& [e, k] : terms_) {
        if (e.total() == degree) p.terms_.emplace(e, k);
    }
    return p;
}

int BivarPoly::min_c_exponent() const {
    if (terms_.empty()) return 0;
    int m = terms_.begin()->first.c;
    for (const auto& [e, k] : terms_) m = std::min(m, e.c);
    return m;
}

std::size_t BivarPoly::max_coeff_bits() const {
    std::size_t bits = 0;
    for (const auto& [e, k] : terms_) bits = std::max(bits, mpz_sizeinbase(k.get_mpz_t(), 2));
    return bits;
}

UniPoly BivarPoly::dehomogenize() const {
    int max_b = 0;
    for (const auto& [e, k] : terms_) max_b = std::max(max_b, e.b);
    std::vector<BigInt> v(static_cast<std::size_t>(max_b) + 1, BigInt(0));
    for (const auto& [e, k] : terms_) v[static_cast<std::size_t>(e.b)] += k;
    return UniPoly(std::move(v));
}

std::string BivarPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, const BigInt*>> sorted;
    sorted.reserve(terms_.size());
    for (const auto& [e, k] : terms_) sorted.emplace_back(e, &k);
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        if (x.first.total() != y.first.total()) return x.first.total() > y.first.total();
        return x.first.b > y.first.b;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, kp] : sorted) {
        const BigInt& k = *kp;
        if (first) {
            if (k < 0) os << "-";
        } else {
            os << (k < 0 ? " - " : " + ");
        }
        first = false;
        BigInt a = abs(k);
        std::vector<std::string> factors;
        if (a != 1 || e.total() == 0) factors.push_back(a.get_str());
        if (e.b == 1) factors.emplace_back("b");
        if (e.b > 1) factors.push_back("b^" + std::to_string(e.b));
        if (e.c == 1) factors.emplace_back("c");
        if (e.c > 1) factors.push_back("c^" + std::to_string(e.c));
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

void BivarPoly::add_term(const Exponent& e, const BigInt& k) {
    if (k == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, k);
    if (!inserted) {
        it->second += k;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly p = *this;
    for (auto& [e, k] : p.terms_) k = -k;
    return p;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [e, k] : o.terms_) add_term(e, k);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [e, k] : o.terms_) add_term(e, -k);
    return *this;
}

BivarPoly BivarPoly::shifted(int b_exp, int c_exp) const {
    BivarPoly p;
    for (const auto& [e, k] : terms_) p.terms_.emplace_hint(p.terms_.end(), Exponent{e.b + b_exp, e.c + c_exp}, k);
    return p;
}

BivarPoly BivarPoly::pow(unsigned e) const {
    BivarPoly result = constant(1);
    BivarPoly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

BivarPoly operator*(const BigInt& k, const BivarPoly& a) {
    BivarPoly p;
    if (k == 0) return p;
    for (const auto& [e, v] : a.terms_) p.terms_.emplace_hint(p.terms_.end(), e, k * v);
    return p;
}

BivarPoly multiply_schoolbook(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly p;
    for (const auto& [ea, ka] : a.terms()) {
        for (const auto& [eb, kb] : b.terms()) {
            p += BivarPoly::monomial(ka * kb, ea.b + eb.b, ea.c + eb.c);
        }
    }
    return p;
}

namespace {

struct PackedLayout {
    int stride = 1;                 // slots per unit of b-exponent
    std::size_t limbs_per_slot = 1;
};

std::size_t bit_length(std::size_t n) {
    std::size_t bits = 0;
    while (n) {
        ++bits;
        n >>= 1u;
    }
    return bits;
}

// Packs sum k * 2^(W * slot) with signed k into one integer.
BigInt pack(const BivarPoly& p, const PackedLayout& layout) {
    int max_b = 0;
    for (const auto& [e, k] : p.terms()) max_b = std::max(max_b, e.b);
    const std::size_t n_slots = static_cast<std::size_t>(max_b + 1) * static_cast<std::size_t>(layout.stride);
    const std::size_t L = layout.limbs_per_slot;
    std::vector<mp_limb_t> pos(n_slots * L, 0);
    std::vector<mp_limb_t> neg;
    bool any_neg = false;
    for (const auto& [e, k] : p.terms()) {
        const std::size_t slot = static_cast<std::size_t>(e.b) * static_cast<std::size_t>(layout.stride) + static_cast<std::size_t>(e.c);
        std::vector<mp_limb_t>* target = &pos;
        if (k < 0) {
            if (!any_neg) {
                neg.assign(n_slots * L, 0);
                any_neg = true;
            }
            target = &neg;
        }
        const mpz_srcptr z = k.get_mpz_t();
        const std::size_t n = mpz_size(z);
        for (std::size_t i = 0; i < n; ++i) (*target)[slot * L + i] = mpz_getlimbn(z, static_cast<mp_size_t>(i));
    }
    BigInt result;
    mpz_import(result.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
    if (any_neg) {
        BigInt n;
        mpz_import(n.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
        result -= n;
    }
    return result;
}

BivarPoly unpack(const BigInt& packed, const PackedLayout& layout) {
    BivarPoly out;
    const int s = sgn(packed);
    if (s == 0) return out;
    BigInt mag = abs(packed);
    const std::size_t L = layout.limbs_per_slot;
    const std::size_t n_limbs = mpz_size(mag.get_mpz_t());
    std::vector<mp_limb_t> limbs(n_limbs + L, 0);
    std::size_t written = 0;
    mpz_export(limbs.data(), &written, -1, sizeof(mp_limb_t), 0, 0, mag.get_mpz_t());
    const std::size_t n_slots = (written + L - 1) / L + 1;
    limbs.resize(n_slots * L, 0);
    BigInt half;
    mpz_setbit(half.get_mpz_t(), static_cast<mp_bitcnt_t>(L * GMP_NUMB_BITS - 1));
    BigInt full = 2 * half;
    BigInt digit;
    int carry = 0;
    BivarPoly::TermMap terms;
    for (std::size_t slot = 0; slot < n_slots; ++slot) {
        mpz_import(digit.get_mpz_t(), L, -1, sizeof(mp_limb_t), 0, 0, limbs.data() + slot * L);
        if (carry) digit += 1;
        if (digit >= half) {
            digit -= full;
            carry = 1;
        } else {
            carry = 0;
        }
        if (digit != 0) {
            const int b_exp = static_cast<int>(slot / static_cast<std::size_t>(layout.stride));
            const int c_exp = static_cast<int>(slot % static_cast<std::size_t>(layout.stride));
            out += BivarPoly::monomial(s > 0 ? digit : BigInt(-digit), b_exp, c_exp);
        }
    }
    return out;
}

}  // namespace

namespace {

BivarPoly kronecker_packed(const BivarPoly& a, const BivarPoly& b) {
    int max_c = 0;
    int ac = 0, bc = 0;
    for (const auto& [e, k] : a.terms()) ac = std::max(ac, e.c);
    for (const auto& [e, k] : b.terms()) bc = std::max(bc, e.c);
    max_c = ac + bc;
    PackedLayout layout;
    layout.stride = max_c + 1;
    const std::size_t bits = a.max_coeff_bits() + b.max_coeff_bits() + bit_length(std::min(a.size(), b.size())) + 2;
    layout.limbs_per_slot = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
    BigInt pa = pack(a, layout);
    BigInt prod;
    if (&a == &b || a == b) {
        mpz_mul(prod.get_mpz_t(), pa.get_mpz_t(), pa.get_mpz_t());
    } else {
        BigInt pb = pack(b, layout);
        mpz_mul(prod.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
    }
    return unpack(prod, layout);
}

// Homogeneous factors only need their b-exponents; pack those along one axis.
BivarPoly multiply_homogeneous(const BivarPoly& a, const BivarPoly& b) {
    const int total = a.degree() + b.degree();
    auto flatten = [](const BivarPoly& p) {
        BivarPoly out;
        for (const auto& [e, k] : p.terms()) out += BivarPoly::monomial(k, 0, e.b);
        return out;
    };
    const BivarPoly fa = flatten(a);
    const BivarPoly flat = (&a == &b || a == b) ? kronecker_packed(fa, fa) : kronecker_packed(fa, flatten(b));
    BivarPoly out;
    for (const auto& [e, k] : flat.terms()) out += BivarPoly::monomial(k, e.c, total - e.c);
    return out;
}

}  // namespace

BivarPoly multiply_kronecker(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_homogeneous() && b.is_homogeneous()) return multiply_homogeneous(a, b);
    return kronecker_packed(a, b);
}

std::pair<BivarPoly, BivarPoly> quadratic_step(const BivarPoly& P, const BivarPoly& Q) {
    if (P.is_zero() && Q.is_zero()) return {};
    int max_c = 0;
    for (const auto* p : {&P, &Q}) {
        for (const auto& [e, k] : p->terms()) max_c = std::max(max_c, e.c);
    }
    PackedLayout layout;
    // c Q^2 raises the c-degree by one more than the squares do.
    layout.stride = 2 * max_c + 2;
    const std::size_t bits = 2 * std::max(P.max_coeff_bits(), Q.max_coeff_bits()) +
                             bit_length(std::max<std::size_t>(std::min(P.size(), Q.size()), 1)) + 4;
    layout.limbs_per_slot = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
    const mp_bitcnt_t slot_bits = layout.limbs_per_slot * GMP_NUMB_BITS;
    const BigInt x = pack(P, layout);
    const BigInt y = pack(Q, layout);
    BigInt xx, yy, ss, z;
    mpz_mul(xx.get_mpz_t(), x.get_mpz_t(), x.get_mpz_t());
    mpz_mul(yy.get_mpz_t(), y.get_mpz_t(), y.get_mpz_t());
    BigInt s = x + y;
    mpz_mul(ss.get_mpz_t(), s.get_mpz_t(), s.get_mpz_t());
    s = 0;
    // ss - xx - yy = 2 x y; multiplying by b shifts by one stride, by c by one slot.
    ss -= xx;
    ss -= yy;
    mpz_tdiv_q_2exp(ss.get_mpz_t(), ss.get_mpz_t(), 1);
    mpz_mul_2exp(ss.get_mpz_t(), ss.get_mpz_t(), slot_bits * static_cast<mp_bitcnt_t>(layout.stride));
    mpz_mul_2exp(yy.get_mpz_t(), yy.get_mpz_t(), slot_bits);
    z = xx + ss + yy;
    ss = 0;
    yy = 0;
    return {unpack(z, layout), unpack(xx, layout)};
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    if (a.size() == 1 || b.size() == 1) {
        const auto& mono = a.size() == 1 ? a : b;
        const auto& other = a.size() == 1 ? b : a;
        const auto& [e, k] = *mono.terms().begin();
        return k * other.shifted(e.b, e.c);
    }
    if (a.size() * b.size() <= 4096) return multiply_schoolbook(a, b);
    return multiply_kronecker(a, b);
}

UniPoly dehomogenized_gcd(const BivarPoly& p, const BivarPoly& q) {
    if (!p.is_homogeneous() || !q.is_homogeneous())
        throw Error(ErrorCode::NonHomogeneous, "dehomogenized_gcd needs homogeneous inputs");
    if (p.is_zero() || q.is_zero())
        throw Error(ErrorCode::InvalidArgument, "dehomogenized_gcd needs nonzero inputs");
    return gcd(p.dehomogenize(), q.dehomogenize());
}

bool homogeneous_coprime(const BivarPoly& p, const BivarPoly& q) {
    UniPoly g = dehomogenized_gcd(p, q);
    return g.degree() == 0 && std::min(p.min_c_exponent(), q.min_c_exponent()) == 0;
}

}  // namespace pernloci
