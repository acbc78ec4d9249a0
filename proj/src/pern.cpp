#include "pernloci/pern.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <tuple>

#include "pernloci/roots.hpp"

namespace pernloci {

namespace {

void check_n(int n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
    if (n > kPernHardLimit)
        throw Error(ErrorCode::LimitExceeded, "n = " + std::to_string(n) + " exceeds the hard cap " + std::to_string(kPernHardLimit));
}

const BivarPoly& var_b() {
    static const BivarPoly b = BivarPoly::var_b();
    return b;
}

const BivarPoly& var_c() {
    static const BivarPoly c = BivarPoly::var_c();
    return c;
}

}  // namespace

std::vector<std::pair<BivarPoly, BivarPoly>> reduced_parts_upto(int n) {
    check_n(n);
    std::vector<std::pair<BivarPoly, BivarPoly>> out;
    out.reserve(static_cast<std::size_t>(n - 1));
    out.emplace_back(BivarPoly::constant(1), BivarPoly::constant(1));
    for (int k = 2; k < n; ++k) {
        const auto& [pk, qk] = out.back();
        if (k % 2 == 1) {
            out.emplace_back(pk + var_b() * qk, pk);
        } else {
            out.emplace_back(qk * (var_b() * pk + var_c() * qk), pk * pk);
        }
    }
    return out;
}

namespace {

// Runs all three recursions once, handing each PernPolys for k = 2..n to sink.
void run_pern(int n, const PernBuildOptions& opts, const std::function<void(PernPolys&&)>& sink, bool keep_all) {
    check_n(n);
    if (n > kPernSoftLimit && opts.warn)
        opts.warn("n = " + std::to_string(n) + " is above the soft limit " + std::to_string(kPernSoftLimit) +
                  "; expansion is expensive");
    const auto reduced = reduced_parts_upto(n);
    BivarPoly P = BivarPoly::constant(1), Q = P, p = P, q = P;
    for (int k = 2;; ++k) {
        if (keep_all || k == n) {
            PernPolys r;
            r.n = k;
            r.full = opts.full;
            if (opts.full) {
                r.P = P;
                r.Q = Q;
            }
            r.p = p;
            r.q = q;
            r.p_red = reduced[static_cast<std::size_t>(k - 2)].first;
            r.q_red = reduced[static_cast<std::size_t>(k - 2)].second;
            sink(std::move(r));
        }
        if (k == n) break;
        if (opts.full) {
            if (P.size() * Q.size() <= 4096) {
                BivarPoly PP = P * P;
                BivarPoly next = PP + (P * Q).shifted(1, 0) + (Q * Q).shifted(0, 1);
                Q = std::move(PP);
                P = std::move(next);
            } else {
                std::tie(P, Q) = quadratic_step(P, Q);
            }
        }
        BivarPoly pp = p * p;
        BivarPoly next = (k % 2 == 1) ? pp + (p * q).shifted(1, 0) : q * (p.shifted(1, 0) + q.shifted(0, 1));
        q = std::move(pp);
        p = std::move(next);
    }
}

}  // namespace

PernPolys build_pern(int n, const PernBuildOptions& opts) {
    PernPolys out;
    run_pern(n, opts, [&](PernPolys&& r) { out = std::move(r); }, false);
    return out;
}

std::vector<PernPolys> build_pern_upto(int n, const PernBuildOptions& opts) {
    std::vector<PernPolys> out;
    run_pern(n, opts, [&](PernPolys&& r) { out.push_back(std::move(r)); }, true);
    return out;
}

std::vector<AsymptoticDirection> asymptotic_directions(int n) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "asymptotic directions need n >= 3");
    auto reduced = reduced_parts_upto(n);
    const UniPoly target = reduced.back().first.dehomogenize();
    if (target.degree() < 1) throw Error(ErrorCode::Degenerate, "p_red_" + std::to_string(n) + "(t, 1) is constant");

    std::vector<std::pair<int, UniPoly>> shared;
    for (int k = 3; k < n; ++k) {
        UniPoly g = gcd(target, reduced[static_cast<std::size_t>(k - 2)].first.dehomogenize());
        if (g.degree() > 0) shared.emplace_back(k, std::move(g));
    }

    std::vector<AsymptoticDirection> out;
    for (const auto& r : roots_with_multiplicity(target)) {
        AsymptoticDirection d;
        d.alpha = r.value;
        d.multiplicity = r.multiplicity;
        d.residual = r.residual;
        for (const auto& [k, g] : shared) {
            if (relative_residual(g, r.value) < 1e-8) d.inherited_from.push_back(k);
        }
        out.push_back(std::move(d));
    }
    return out;
}

// ---------------------------------------------------------------- Per_4

namespace {

template <class F, class Same>
Per4Point<F> per4_impl(const F& rho, Same same) {
    if (is_zero(rho) || rho == F(1) || F(2) * rho == F(1))
        throw Error(ErrorCode::ExcludedRho, "rho must avoid 0, 1, 1/2, and infinity");
    Per4Point<F> pt;
    pt.rho = rho;
    const F one(1);
    pt.b = (-(rho * rho) - rho + one) / (rho - one);
    pt.c = (F(2) * rho * rho - rho) / (rho - one);
    QuadMap<F> f(pt.b, pt.c);
    pt.z_crit = f.crit2();
    pt.v = f.critical_value();
    const F s = rho * rho + rho - one;
    pt.v_expanded = Extended<F>(one - s * s / (F(4) * (rho - one) * (F(2) * rho * rho - rho)));
    const Extended<F> v = pt.v;
    pt.in_per4_prime = !(same(v, Extended<F>(F(0))) || same(v, Extended<F>(one)) || same(v, Extended<F>(rho)));
    return pt;
}

}  // namespace

Per4Point<Rational> per4_from_rho(const Rational& rho) {
    return per4_impl(rho, [](const auto& a, const auto& b) { return a == b; });
}

Per4Point<QComplex> per4_from_rho(const QComplex& rho) {
    return per4_impl(rho, [](const auto& a, const auto& b) { return a == b; });
}

Per4Point<cplx> per4_from_rho(const cplx& rho, double tol) {
    return per4_impl(rho, [tol](const ComplexVal& a, const ComplexVal& b) { return chordal(a, b) <= tol; });
}

// ---------------------------------------------------------------- Per_3

namespace {

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    BigInt n = x.num(), d = x.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

}  // namespace

// With c = -1 - b, v = 1 + b^2 / (4 (1 + b)), i.e. b^2 - 4 (v - 1) b - 4 (v - 1) = 0.
std::optional<Per3Fiber<Rational>> per3_fiber_exact(const Rational& v) {
    const Rational w = v - Rational(1);
    const Rational disc = Rational(16) * w * v;
    if (disc.is_zero()) throw Error(ErrorCode::DegenerateFiber, "double root: v must avoid 0 and 1");
    auto root = rational_sqrt(disc);
    if (!root) return std::nullopt;
    const Rational b1 = (Rational(4) * w + *root) / Rational(2);
    const Rational b2 = (Rational(4) * w - *root) / Rational(2);
    return Per3Fiber<Rational>{Extended<Rational>(v),
                               {QuadMap<Rational>(b1, Rational(-1) - b1), QuadMap<Rational>(b2, Rational(-1) - b2)}};
}

Per3Fiber<cplx> per3_fiber(const cplx& v) {
    const cplx w = v - 1.0;
    const cplx disc = 16.0 * w * v;
    if (disc == cplx(0.0)) throw Error(ErrorCode::DegenerateFiber, "double root: v must avoid 0 and 1");
    const cplx root = std::sqrt(disc);
    const cplx b1 = (4.0 * w + root) / 2.0;
    const cplx b2 = (4.0 * w - root) / 2.0;
    return Per3Fiber<cplx>{ComplexVal(v), {QuadMap<cplx>(b1, -1.0 - b1), QuadMap<cplx>(b2, -1.0 - b2)}};
}

// ---------------------------------------------------------------- continuation

cplx pern_newton_ratio(int n, const cplx& b, const cplx& c) {
    // Every update is quadratic in (P, Q, P', Q'), so rescaling all four by a
    // common factor leaves P / P' unchanged.
    cplx P = 1.0, Q = 1.0, dP = 0.0, dQ = 0.0;
    for (int k = 2; k < n; ++k) {
        const cplx nP = P * P + b * P * Q + c * Q * Q;
        const cplx nQ = P * P;
        const cplx ndP = 2.0 * P * dP + P * Q + b * (dP * Q + P * dQ) + 2.0 * c * Q * dQ;
        const cplx ndQ = 2.0 * P * dP;
        const double s = std::max({std::abs(nP), std::abs(nQ), std::abs(ndP), std::abs(ndQ)});
        if (s == 0.0 || !std::isfinite(s)) return {std::nan(""), std::nan("")};
        P = nP / s;
        Q = nQ / s;
        dP = ndP / s;
        dQ = ndQ / s;
    }
    if (dP == cplx(0.0)) return {std::nan(""), std::nan("")};
    return P / dP;
}

bool relatively_distinct(const ComplexVal& a, const ComplexVal& b, double tol) {
    if (a.is_inf() && b.is_inf()) return false;
    if (a.is_inf() || b.is_inf()) {
        const cplx& w = a.is_inf() ? b.value() : a.value();
        return std::abs(w) * tol < 1.0;
    }
    const double scale = std::max({1.0, std::abs(a.value()), std::abs(b.value())});
    return std::abs(a.value() - b.value()) > tol * scale;
}

namespace {

double relative_gap(const ComplexVal& a, const ComplexVal& b) {
    if (a.is_inf() && b.is_inf()) return 0.0;
    if (a.is_inf() || b.is_inf()) {
        const cplx& w = a.is_inf() ? b.value() : a.value();
        return 1.0 / std::max(1.0, std::abs(w));
    }
    const double scale = std::max({1.0, std::abs(a.value()), std::abs(b.value())});
    return std::abs(a.value() - b.value()) / scale;
}

}  // namespace

PernSolveResult solve_pern_near_direction(int n, const cplx& alpha, const cplx& c, const PernSolveOptions& opts) {
    check_n(n);
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "continuation needs n >= 3");
    if (c == cplx(0.0)) throw Error(ErrorCode::Degenerate, "c must be nonzero");
    PernSolveResult r;
    r.n = n;
    r.alpha = alpha;
    r.c = c;
    cplx b = alpha * c;
    bool converged = false;
    for (int it = 0; it <= opts.max_iterations; ++it) {
        const cplx ratio = pern_newton_ratio(n, b, c);
        if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag()))
            throw Error(ErrorCode::NoConvergence, "derivative of P_n vanished during Newton iteration");
        r.residual_ratio = std::abs(ratio) / std::max(std::abs(b), 1e-300);
        r.iterations = it;
        if (std::abs(ratio) < opts.residual_tol * std::abs(b)) {
            converged = true;
            break;
        }
        if (it == opts.max_iterations) break;
        b -= ratio;
    }
    if (!converged)
        throw Error(ErrorCode::NoConvergence, "Newton did not converge in " + std::to_string(opts.max_iterations) + " iterations");
    r.b = b;

    const QuadMap<cplx> f(b, c);
    const auto pts = orbit(f, ComplexVal(cplx(0.0)), n);
    r.orbit = pts;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!relatively_distinct(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)], opts.period_tol)) {
                throw Error(ErrorCode::WrongPeriod, "orbit of 0 returns early: f^" + std::to_string(i) + "(0) ~ f^" +
                                                        std::to_string(j) + "(0)");
            }
        }
    }
    if (relatively_distinct(pts[static_cast<std::size_t>(n)], pts[0], opts.period_tol))
        throw Error(ErrorCode::NoConvergence, "residual test passed but f^n(0) is not 0");
    r.exact_period = n;
    r.v = f.critical_value();
    r.v_min_distance = 1.0;
    for (int i = 0; i < n; ++i) r.v_min_distance = std::min(r.v_min_distance, relative_gap(r.v, pts[static_cast<std::size_t>(i)]));
    r.in_pern_prime = r.v_min_distance > opts.period_tol;
    return r;
}

// ---------------------------------------------------------------- punctures

std::pair<UniPoly, UniPoly> per4_v_rational_function() {
    // v = 1 - (rho^2 + rho - 1)^2 / (4 rho (rho - 1)(2 rho - 1))
    const UniPoly s({BigInt(-1), BigInt(1), BigInt(1)});
    const UniPoly D({BigInt(0), BigInt(4), BigInt(-12), BigInt(8)});
    return {D - s * s, D};
}

std::vector<std::pair<std::string, std::string>> PunctureReport::collision_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& cl : clusters) {
        for (std::size_t i = 0; i < cl.size(); ++i) {
            for (std::size_t j = i + 1; j < cl.size(); ++j) out.emplace_back(cl[i], cl[j]);
        }
    }
    return out;
}

namespace {

// Limit of a marked point at the roots of an irreducible-over-the-test factor g.
enum class Limit { Zero, One, Inf, Rho, Other };

struct Piece {
    UniPoly g;
    std::string name;
};

const UniPoly& rho_poly() {
    static const UniPoly r({BigInt(0), BigInt(1)});
    return r;
}

// Splits g by every test polynomial so that each test is either divisible by
// the piece or coprime to it.
std::vector<UniPoly> refine(const UniPoly& g, const std::vector<UniPoly>& tests) {
    std::vector<UniPoly> pieces{g.primitive()};
    for (const auto& t : tests) {
        std::vector<UniPoly> next;
        for (const auto& p : pieces) {
            UniPoly h = gcd(p, t);
            if (h.degree() <= 0 || h.degree() == p.degree()) {
                next.push_back(p);
            } else {
                next.push_back(h);
                next.push_back(exact_quotient(p, h).primitive());
            }
        }
        pieces = std::move(next);
    }
    return pieces;
}

std::vector<std::string> pinch(const std::vector<std::vector<std::string>>& clusters) {
    std::vector<std::string> out;
    for (const auto& cl : clusters) {
        std::string s = "curve encircling {";
        for (std::size_t i = 0; i < cl.size(); ++i) s += (i ? ", " : "") + cl[i];
        out.push_back(s + "}");
    }
    return out;
}

std::vector<std::vector<std::string>> cluster(const std::map<std::string, Limit>& limits, bool rho_inf) {
    // rho's limit is only ever compared through its own tag.
    std::map<Limit, std::vector<std::string>> groups;
    const std::vector<std::string> order{"0", "1", "inf", "rho", "v"};
    for (const auto& label : order) {
        Limit l = limits.at(label);
        if (label == "rho" && rho_inf) l = Limit::Inf;
        groups[l].push_back(label);
    }
    std::vector<std::vector<std::string>> out;
    for (auto& [l, g] : groups) {
        if (g.size() >= 2 && l != Limit::Other) {
            // Order v first to match the usual "v, rho, inf" listing.
            std::stable_sort(g.begin(), g.end(), [](const std::string& a, const std::string& b) {
                auto rank = [](const std::string& s) { return s == "v" ? 0 : (s == "rho" ? 1 : 2); };
                return rank(a) < rank(b);
            });
            out.push_back(g);
        }
    }
    return out;
}

}  // namespace

std::vector<PunctureReport> per4_puncture_analysis() {
    const auto [N, D] = per4_v_rational_function();
    const UniPoly one = UniPoly::constant(1);
    const UniPoly rho_minus_one({BigInt(-1), BigInt(1)});
    // Tests deciding the limit of v and of rho at a root of a factor.
    const UniPoly v_zero = N;
    const UniPoly v_one = N - D;
    const UniPoly v_rho = N - rho_poly() * D;
    const std::vector<UniPoly> tests{rho_poly(), rho_minus_one, D, v_zero, v_one, v_rho};

    std::vector<std::pair<std::string, UniPoly>> sources{
        {"rho=0", rho_poly()},
        {"rho=1", rho_minus_one},
        {"rho=1/2", UniPoly({BigInt(-1), BigInt(2)})},
    };
    std::vector<PunctureReport> out;

    auto analyse = [&](const std::string& name, const UniPoly& source) {
        for (const auto& [factor, mult] : squarefree_decomposition(source)) {
            (void)mult;
            for (const UniPoly& g : refine(factor, tests)) {
                PunctureReport rep;
                rep.puncture = name;
                rep.defining_polynomial = g.str("rho");
                rep.rho_values = simple_roots(g);
                std::map<std::string, Limit> lim{{"0", Limit::Zero}, {"1", Limit::One}, {"inf", Limit::Inf}};
                lim["rho"] = divides(g, rho_poly()) ? Limit::Zero : (divides(g, rho_minus_one) ? Limit::One : Limit::Rho);
                if (divides(g, D)) {
                    lim["v"] = Limit::Inf;
                } else if (divides(g, v_zero)) {
                    lim["v"] = Limit::Zero;
                } else if (divides(g, v_one)) {
                    lim["v"] = Limit::One;
                } else if (divides(g, v_rho)) {
                    lim["v"] = lim["rho"] == Limit::Rho ? Limit::Rho : lim["rho"];
                } else {
                    lim["v"] = Limit::Other;
                }
                rep.clusters = cluster(lim, false);
                rep.pinching_curves = pinch(rep.clusters);
                if (lim["v"] == Limit::Inf) rep.asymptotics = "v -> inf";
                out.push_back(std::move(rep));
            }
        }
    };

    for (const auto& [name, g] : sources) analyse(name, g);

    // rho -> infinity: compare degrees of N and D.
    {
        PunctureReport rep;
        rep.puncture = "rho=inf";
        std::map<std::string, Limit> lim{{"0", Limit::Zero}, {"1", Limit::One}, {"inf", Limit::Inf}, {"rho", Limit::Inf}};
        const int excess = N.degree() - D.degree();
        if (excess > 0) {
            lim["v"] = Limit::Inf;
            if (excess == 1) {
                const Rational ratio(N.leading(), D.leading());
                rep.asymptotics = "v ~ " + ratio.str() + " * rho";
            } else {
                rep.asymptotics = "v ~ rho^" + std::to_string(excess);
            }
        } else {
            lim["v"] = Limit::Other;
        }
        rep.clusters = cluster(lim, true);
        rep.pinching_curves = pinch(rep.clusters);
        out.push_back(std::move(rep));
    }

    analyse("v=0", v_zero);
    analyse("v=1", v_one);
    analyse("v=rho", v_rho);
    (void)one;
    return out;
}

}  // namespace pernloci
