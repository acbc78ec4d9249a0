#include "pernloci/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pernloci/error.hpp"

namespace pernloci {

double relative_residual(const UniPoly& p, const cplx& t) {
    const double scale = p.abs_eval(std::abs(t));
    if (scale == 0.0) return 0.0;
    return std::abs(p.eval(t)) / scale;
}

namespace {

void eval_with_derivative(const std::vector<cplx>& a, const cplx& t, cplx& value, cplx& deriv) {
    value = 0.0;
    deriv = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        deriv = deriv * t + value;
        value = value * t + *it;
    }
}

}  // namespace

std::vector<cplx> simple_roots(const UniPoly& p, const RootFinderOptions& opts) {
    const int n = p.degree();
    if (n < 1) return {};
    std::vector<cplx> a;
    a.reserve(p.coeffs().size());
    // Normalize by the leading coefficient to keep the iteration well scaled.
    const double lead = p.leading().get_d();
    for (const auto& k : p.coeffs()) a.emplace_back(k.get_d() / lead, 0.0);
    if (n == 1) return {-a[0]};

    // Initial guesses on a circle of the Fujiwara bound radius, slightly rotated.
    double radius = 0.0;
    for (int i = 0; i < n; ++i) {
        radius = std::max(radius, std::pow(std::abs(a[static_cast<std::size_t>(i)]), 1.0 / (n - i)));
    }
    radius = std::max(2.0 * radius, 1e-3);
    std::vector<cplx> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n + 0.4;
        z[static_cast<std::size_t>(k)] = std::polar(radius * (0.5 + 0.5 * (k + 1) / n), theta);
    }

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        double max_step = 0.0;
        for (int k = 0; k < n; ++k) {
            cplx v, d;
            eval_with_derivative(a, z[static_cast<std::size_t>(k)], v, d);
            if (v == cplx(0.0, 0.0)) continue;
            const cplx ratio = v / d;
            cplx sum = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j != k) sum += 1.0 / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            }
            const cplx step = ratio / (1.0 - ratio * sum);
            z[static_cast<std::size_t>(k)] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[static_cast<std::size_t>(k)])));
        }
        if (max_step < 1e-15) break;
    }

    for (auto& root : z) {
        for (int it = 0; it < 20; ++it) {
            if (relative_residual(p, root) <= opts.residual_tol) break;
            cplx v, d;
            eval_with_derivative(a, root, v, d);
            if (d == cplx(0.0, 0.0)) break;
            root -= v / d;
        }
    }
    // Real coefficients: snap numerically real roots onto the axis.
    for (auto& root : z) {
        if (std::abs(root.imag()) <= 1e-13 * std::max(1.0, std::abs(root))) root.imag(0.0);
    }
    std::sort(z.begin(), z.end(), [](const cplx& x, const cplx& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return z;
}

std::vector<RootWithMultiplicity> roots_with_multiplicity(const UniPoly& p, const RootFinderOptions& opts) {
    std::vector<RootWithMultiplicity> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        for (const cplx& r : simple_roots(factor, opts)) {
            out.push_back({r, mult, relative_residual(factor, r)});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
        return x.value.imag() < y.value.imag();
    });
    return out;
}

}  // namespace pernloci
