#include "pernloci/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace pernloci {

Preimages preimage_roots(const QuadMap<cplx>& f, const ComplexVal& z) {
    Preimages out;
    const cplx b = f.b();
    const cplx c = f.c();
    if (z.is_inf()) {
        out.roots = {ComplexVal(cplx(0.0)), ComplexVal(cplx(0.0))};
        out.double_root = true;
        return out;
    }
    const cplx a = 1.0 - z.value();
    if (a == cplx(0.0)) {
        if (b == cplx(0.0)) {
            out.roots = {ComplexVal::infinity(), ComplexVal::infinity()};
            out.double_root = true;
        } else {
            out.roots = {ComplexVal(-c / b), ComplexVal::infinity()};
        }
        return out;
    }
    const cplx disc = b * b - 4.0 * a * c;
    if (disc == cplx(0.0)) {
        const cplx w = -b / (2.0 * a);
        out.roots = {ComplexVal(w), ComplexVal(w)};
        out.double_root = true;
        return out;
    }
    cplx sq = std::sqrt(disc);
    // Pick the sign that avoids cancellation in -b -/+ sq.
    if ((std::conj(b) * sq).real() < 0.0) sq = -sq;
    const cplx q = -0.5 * (b + sq);
    if (q == cplx(0.0)) {
        // b = 0 and disc = 0 would have returned above; q = 0 only if both vanish.
        out.roots = {ComplexVal(cplx(0.0)), ComplexVal(cplx(0.0))};
        out.double_root = true;
        return out;
    }
    const cplx w1 = q / a;
    const cplx w2 = c / q;
    out.roots = {ComplexVal(w1), ComplexVal(w2)};
    return out;
}

// ---------------------------------------------------------------- MarkedSet

namespace {

cplx rotate(const cplx& z, double angle) { return z * std::polar(1.0, angle); }

double finite_diameter(const std::vector<MarkedPoint>& points) {
    double d = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].pos.is_inf()) continue;
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[j].pos.is_inf()) continue;
            d = std::max(d, std::abs(points[i].pos.value() - points[j].pos.value()));
        }
    }
    return d;
}

bool chart_ok(const std::vector<MarkedPoint>& points, double angle) {
    std::vector<double> xs;
    for (const auto& p : points) {
        if (p.pos.is_finite()) xs.push_back(rotate(p.pos.value(), -angle).real());
    }
    std::sort(xs.begin(), xs.end());
    const double scale = std::max(finite_diameter(points), 1.0);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] - xs[i - 1] <= 1e-9 * scale) return false;
    }
    return true;
}

}  // namespace

double choose_chart_angle(const std::vector<MarkedPoint>& points) {
    if (chart_ok(points, 0.0)) return 0.0;
    for (int k = 1; k < 1000; ++k) {
        // Irrational multiples of pi give a deterministic, generic sequence.
        const double angle = std::fmod(k * 0.6180339887498949 * 3.141592653589793, 3.141592653589793);
        if (chart_ok(points, angle)) return angle;
    }
    throw Error(ErrorCode::Validation, "no generic chart rotation found for marked set");
}

bool same_position(const ComplexVal& a, const ComplexVal& b, double rel_tol) {
    if (a.is_inf() || b.is_inf()) return a.is_inf() && b.is_inf();
    const double scale = std::max({1.0, std::abs(a.value()), std::abs(b.value())});
    return std::abs(a.value() - b.value()) <= rel_tol * scale;
}

MarkedSet::MarkedSet(std::vector<MarkedPoint> points) : points_(std::move(points)) {
    validate();
    chart_angle_ = choose_chart_angle(points_);
}

MarkedSet::MarkedSet(std::vector<MarkedPoint> points, double chart_angle)
    : points_(std::move(points)), chart_angle_(chart_angle) {
    validate();
    if (!chart_ok(points_, chart_angle_))
        throw Error(ErrorCode::Validation, "chart angle leaves two marked points on one vertical line");
}

void MarkedSet::validate() const {
    std::set<std::string> seen;
    int n_inf = 0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        if (!seen.insert(p.label).second) throw Error(ErrorCode::Validation, "duplicate marked label '" + p.label + "'");
        if (p.pos.is_inf()) {
            ++n_inf;
            continue;
        }
        if (!std::isfinite(p.pos.value().real()) || !std::isfinite(p.pos.value().imag()))
            throw Error(ErrorCode::Validation, "marked point '" + p.label + "' is not finite");
        for (std::size_t j = 0; j < i; ++j) {
            if (points_[j].pos == p.pos)
                throw Error(ErrorCode::Validation, "marked points '" + points_[j].label + "' and '" + p.label + "' coincide");
        }
    }
    if (n_inf > 1) throw Error(ErrorCode::Validation, "more than one marked point at infinity");
}

std::optional<std::size_t> MarkedSet::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].label == label) return i;
    }
    return std::nullopt;
}

const MarkedPoint& MarkedSet::at(const std::string& label) const {
    auto i = index_of(label);
    if (!i) throw Error(ErrorCode::Validation, "no marked point labelled '" + label + "'");
    return points_[*i];
}

bool MarkedSet::has_infinity() const {
    return std::any_of(points_.begin(), points_.end(), [](const auto& p) { return p.pos.is_inf(); });
}

double MarkedSet::diameter() const {
    const double d = finite_diameter(points_);
    return d > 0.0 ? d : 1.0;
}

MarkedSet MarkedSet::subset(const std::vector<std::string>& labels) const {
    std::vector<MarkedPoint> pts;
    for (const auto& p : points_) {
        if (std::find(labels.begin(), labels.end(), p.label) != labels.end()) pts.push_back(p);
    }
    for (const auto& l : labels) {
        if (!index_of(l)) throw Error(ErrorCode::NotSubset, "label '" + l + "' is not in the marked set");
    }
    return MarkedSet(std::move(pts), chart_angle_);
}

MarkedSet MarkedSet::with_point(MarkedPoint p) const {
    std::vector<MarkedPoint> pts = points_;
    pts.push_back(std::move(p));
    return MarkedSet(std::move(pts));
}

std::vector<std::string> MarkedSet::labels() const {
    std::vector<std::string> out;
    for (const auto& p : points_) out.push_back(p.label);
    return out;
}

bool MarkedSet::same_as(const MarkedSet& o) const {
    if (points_.size() != o.points_.size() || chart_angle_ != o.chart_angle_) return false;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].label != o.points_[i].label || !(points_[i].pos == o.points_[i].pos)) return false;
    }
    return true;
}

bool MarkedSet::contains_all(const MarkedSet& o) const {
    for (const auto& p : o.points_) {
        auto i = index_of(p.label);
        if (!i || !(points_[*i].pos == p.pos)) return false;
    }
    return true;
}

}  // namespace pernloci
