#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pernloci/dynamics.hpp"
#include "pernloci/poly.hpp"

namespace pernloci {

inline constexpr int kPernSoftLimit = 14;
inline constexpr int kPernHardLimit = 20;

/// Defining polynomials of Per_n: rho_n = P_n / Q_n where rho_k = f^{k-2}(1).
struct PernPolys {
    int n = 2;
    bool full = true;  ///< P and Q expanded (false when only the top parts were requested)
    BivarPoly P;
    BivarPoly Q;
    BivarPoly p;      ///< highest homogeneous part of P
    BivarPoly q;      ///< highest homogeneous part of Q
    BivarPoly p_red;  ///< p with the common factor of p and q cancelled
    BivarPoly q_red;
};

struct PernBuildOptions {
    bool full = true;
    /// Receives warnings such as crossing the soft size limit.
    std::function<void(const std::string&)> warn;
};

/// Builds P_n, Q_n from P_{k+1} = P_k^2 + b P_k Q_k + c Q_k^2, Q_{k+1} = P_k^2, their
/// top parts by the parity-split homogeneous recursion, and the reduced parts by the
/// reduced recursion from p_red_2 = q_red_2 = 1.
PernPolys build_pern(int n, const PernBuildOptions& opts = {});

/// build_pern for every k = 2..n in one pass of the recursions.
std::vector<PernPolys> build_pern_upto(int n, const PernBuildOptions& opts = {});

/// Only the reduced top parts (p_red_k, q_red_k) for 2 <= k <= n; cheap for every n.
std::vector<std::pair<BivarPoly, BivarPoly>> reduced_parts_upto(int n);

struct AsymptoticDirection {
    cplx alpha;
    int multiplicity = 1;
    double residual = 0.0;
    /// Every k < n with p_red_k(alpha, 1) = 0.
    std::vector<int> inherited_from;
    bool inherited() const { return !inherited_from.empty(); }
};

/// Roots alpha of p_red_n(t, 1): directions b/c -> alpha where Per_n meets the line at infinity.
std::vector<AsymptoticDirection> asymptotic_directions(int n);

// ---------------------------------------------------------------- Per_4

template <class F>
struct Per4Point {
    F rho;
    F b;
    F c;
    Extended<F> z_crit;
    Extended<F> v;           ///< 1 - b^2/(4c)
    Extended<F> v_expanded;  ///< 1 - (rho^2+rho-1)^2 / (4 (rho-1)(2 rho^2 - rho))
    bool in_per4_prime = true;  ///< false when v is 0, 1, or rho

    QuadMap<F> map() const { return QuadMap<F>(b, c); }
};

Per4Point<Rational> per4_from_rho(const Rational& rho);
Per4Point<QComplex> per4_from_rho(const QComplex& rho);
/// Float kind; membership in Per'_4 is judged at chordal distance tol.
Per4Point<cplx> per4_from_rho(const cplx& rho, double tol = 1e-9);

// ---------------------------------------------------------------- Per_3

template <class F>
struct Per3Fiber {
    Extended<F> v;
    std::array<QuadMap<F>, 2> maps;
};

/// The two Per_3 maps (c = -1 - b) with second critical value v, when the
/// discriminant 16 v (v - 1) is a rational square; nullopt otherwise.
std::optional<Per3Fiber<Rational>> per3_fiber_exact(const Rational& v);
Per3Fiber<cplx> per3_fiber(const cplx& v);

// ---------------------------------------------------------------- projectability

/// Solves 1 + b + c = rho and rho^2 + b rho + c = rho^2 s.
template <class F>
std::pair<F, F> params_from_rho_s(const F& rho, const F& s) {
    if (rho == F(1)) throw Error(ErrorCode::Singular, "determinant 1 - rho vanishes at rho = 1");
    if (is_zero(rho)) throw Error(ErrorCode::Degenerate, "rho = 0 forces f(rho) = infinity");
    const F b = (rho * rho * (s - F(1)) - (rho - F(1))) / (rho - F(1));
    const F c = rho - F(1) - b;
    if (is_zero(c)) throw Error(ErrorCode::Degenerate, "solution has c = 0 (degree drops)");
    return {b, c};
}

// ---------------------------------------------------------------- continuation

struct PernSolveOptions {
    int max_iterations = 100;
    double residual_tol = 1e-10;
    double period_tol = 1e-6;
};

struct PernSolveResult {
    int n = 0;
    cplx alpha;
    cplx b;
    cplx c;
    int iterations = 0;
    double residual_ratio = 0.0;   ///< |P_n / (dP_n/db)| / |b| at the returned b
    std::vector<ComplexVal> orbit; ///< 0, inf, 1, rho_3, ..., rho_n
    int exact_period = 0;
    bool in_pern_prime = false;
    double v_min_distance = 0.0;   ///< smallest relative distance from v to the orbit
    ComplexVal v;

    QuadMap<cplx> map() const { return QuadMap<cplx>(b, c); }
};

/// Newton iteration on b -> P_n(b, c) started at b = alpha c.
PernSolveResult solve_pern_near_direction(int n, const cplx& alpha, const cplx& c,
                                          const PernSolveOptions& opts = {});

/// P_n(b, c) / (dP_n/db)(b, c) through a rescaled recursion that never overflows.
cplx pern_newton_ratio(int n, const cplx& b, const cplx& c);

/// Relative distinctness used for the exact-period verification.
bool relatively_distinct(const ComplexVal& a, const ComplexVal& b, double tol);

// ---------------------------------------------------------------- punctures of Per'_4

struct PunctureReport {
    std::string puncture;              ///< "rho=0", "rho=inf", "v=rho", ...
    std::vector<cplx> rho_values;      ///< numeric locations (empty for rho = inf)
    std::string defining_polynomial;   ///< square-free polynomial in rho, when the puncture is algebraic
    std::vector<std::vector<std::string>> clusters;  ///< groups of marked points that merge
    std::vector<std::string> pinching_curves;
    std::string asymptotics;           ///< leading behaviour of v where relevant

    std::vector<std::pair<std::string, std::string>> collision_pairs() const;
};

/// Which of the marked points 0, 1, inf, rho, v collide at each puncture of Per'_4,
/// certified by exact limits of v(rho) = N(rho)/D(rho).
std::vector<PunctureReport> per4_puncture_analysis();

/// Numerator and denominator of v(rho) on Per_4, as integer polynomials in rho.
std::pair<UniPoly, UniPoly> per4_v_rational_function();

}  // namespace pernloci
