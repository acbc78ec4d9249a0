#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pernloci/error.hpp"
#include "pernloci/exact.hpp"

namespace pernloci {

/// The quadratic map z -> 1 + b/z + c/z^2 over the field F (Rational, QComplex, or cplx).
/// Critical points are 0 (mapped to infinity) and -2c/b; infinity maps to 1.
template <class F>
class QuadMap {
public:
    using Point = Extended<F>;

    QuadMap(F b, F c) : b_(std::move(b)), c_(std::move(c)) {
        if (is_zero(c_)) throw Error(ErrorCode::Degenerate, "c = 0 gives a map of degree < 2");
    }

    const F& b() const { return b_; }
    const F& c() const { return c_; }

    Point operator()(const Point& z) const {
        if (z.is_inf()) return Point(F(1));
        if (is_zero(z.value())) return Point::infinity();
        const F inv = F(1) / z.value();
        return Point(F(1) + b_ * inv + c_ * inv * inv);
    }

    /// The non-marked critical point -2c/b (infinity when b = 0).
    Point crit2() const {
        if (is_zero(b_)) return Point::infinity();
        return Point(-(F(2) * c_) / b_);
    }

    /// Second critical value v = 1 - b^2/(4c).
    Point critical_value() const { return Point(F(1) - b_ * b_ / (F(4) * c_)); }

    QuadMap<cplx> to_float() const { return QuadMap<cplx>(to_cplx(b_), to_cplx(c_)); }

private:
    F b_;
    F c_;
};

/// z0, f(z0), ..., f^k(z0).
template <class F>
std::vector<Extended<F>> orbit(const QuadMap<F>& f, const Extended<F>& z0, int k) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "orbit length must be non-negative");
    std::vector<Extended<F>> out;
    out.reserve(static_cast<std::size_t>(k) + 1);
    out.push_back(z0);
    for (int i = 0; i < k; ++i) out.push_back(f(out.back()));
    return out;
}

struct PernCheck {
    bool cycle_closes = false;   ///< f^n(0) = 0
    bool orbit_distinct = false; ///< 0, f(0), ..., f^{n-1}(0) pairwise distinct
    bool v_off_orbit = false;    ///< v differs from every orbit point
    std::vector<ComplexVal> orbit;
    ComplexVal v;

    bool in_pern() const { return cycle_closes && orbit_distinct; }
    bool in_pern_prime() const { return in_pern() && v_off_orbit; }
};

/// Membership in Per_n and Per'_n. Exact fields compare exactly and ignore tol;
/// the float field compares with the chordal metric.
template <class F>
PernCheck check_pern_prime(const QuadMap<F>& f, int n, double tol = 1e-6) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "check_pern_prime needs n >= 3");
    const auto pts = orbit(f, Extended<F>(F(0)), n);
    const auto v = f.critical_value();
    auto same = [tol](const Extended<F>& a, const Extended<F>& b) {
        if constexpr (is_exact_field_v<F>) {
            (void)tol;
            return a == b;
        } else {
            return chordal(a, b) <= tol;
        }
    };
    PernCheck r;
    r.cycle_closes = same(pts[static_cast<std::size_t>(n)], pts[0]);
    r.orbit_distinct = true;
    r.v_off_orbit = true;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (same(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)])) r.orbit_distinct = false;
        }
        if (same(pts[static_cast<std::size_t>(i)], v)) r.v_off_orbit = false;
    }
    for (const auto& p : pts) r.orbit.push_back(to_complex_val(p));
    r.v = to_complex_val(v);
    return r;
}

struct Preimages {
    std::array<ComplexVal, 2> roots;
    bool double_root = false;
};

/// Solutions w of f(w) = z, i.e. (1 - z) w^2 + b w + c = 0, with the degenerate
/// cases z = 1 (one root at infinity), z = infinity (double root 0) and z = v.
Preimages preimage_roots(const QuadMap<cplx>& f, const ComplexVal& z);

struct MarkedPoint {
    std::string label;
    ComplexVal pos;
};

/// Ordered, labelled finite subset of the sphere. The chart angle is the rotation
/// applied before cutting along vertical rays; it is chosen so that no two finite
/// points share a real part, and subsets inherit it.
class MarkedSet {
public:
    MarkedSet() = default;
    explicit MarkedSet(std::vector<MarkedPoint> points);
    MarkedSet(std::vector<MarkedPoint> points, double chart_angle);

    std::size_t size() const { return points_.size(); }
    const std::vector<MarkedPoint>& points() const { return points_; }
    const MarkedPoint& operator[](std::size_t i) const { return points_[i]; }
    std::optional<std::size_t> index_of(const std::string& label) const;
    const MarkedPoint& at(const std::string& label) const;
    bool has_infinity() const;
    double chart_angle() const { return chart_angle_; }
    /// Largest distance between finite points (1 if fewer than two).
    double diameter() const;

    /// Points with the given labels, in this set's order, sharing its chart.
    MarkedSet subset(const std::vector<std::string>& labels) const;
    MarkedSet with_point(MarkedPoint p) const;
    std::vector<std::string> labels() const;

    /// Same labels, positions, order, and chart.
    bool same_as(const MarkedSet& o) const;
    /// Every point of o appears here with the same label and position.
    bool contains_all(const MarkedSet& o) const;

private:
    void validate() const;
    std::vector<MarkedPoint> points_;
    double chart_angle_ = 0.0;
};

/// Deterministic rotation making finite real parts pairwise distinct.
double choose_chart_angle(const std::vector<MarkedPoint>& points);

/// Position comparison used for marked points: exact for infinity, relative otherwise.
bool same_position(const ComplexVal& a, const ComplexVal& b, double rel_tol);

}  // namespace pernloci
