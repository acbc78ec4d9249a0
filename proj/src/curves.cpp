#include "pernloci/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <gmpxx.h>

namespace pernloci {

// ---------------------------------------------------------------- predicates

int orient2d(const cplx& a, const cplx& b, const cplx& c) {
    const double detleft = (a.real() - c.real()) * (b.imag() - c.imag());
    const double detright = (a.imag() - c.imag()) * (b.real() - c.real());
    const double det = detleft - detright;
    const double errbound = 3.3306690738754716e-16 * (std::abs(detleft) + std::abs(detright));
    if (det > errbound) return 1;
    if (-det > errbound) return -1;
    // Exact fallback: doubles convert to rationals without rounding.
    const mpq_class ax(a.real()), ay(a.imag()), bx(b.real()), by(b.imag()), cx(c.real()), cy(c.imag());
    const mpq_class e = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
    return sgn(e);
}

namespace {

bool within_box(const cplx& p, const cplx& q, const cplx& r) {
    return std::min(p.real(), q.real()) <= r.real() && r.real() <= std::max(p.real(), q.real()) &&
           std::min(p.imag(), q.imag()) <= r.imag() && r.imag() <= std::max(p.imag(), q.imag());
}

cplx rotate_to_chart(const cplx& z, double angle) {
    if (angle == 0.0) return z;
    return z * std::polar(1.0, -angle);
}

}  // namespace

bool segments_intersect(const cplx& p1, const cplx& p2, const cplx& q1, const cplx& q2) {
    const int o1 = orient2d(p1, p2, q1);
    const int o2 = orient2d(p1, p2, q2);
    const int o3 = orient2d(q1, q2, p1);
    const int o4 = orient2d(q1, q2, p2);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && within_box(p1, p2, q1)) return true;
    if (o2 == 0 && within_box(p1, p2, q2)) return true;
    if (o3 == 0 && within_box(q1, q2, p1)) return true;
    if (o4 == 0 && within_box(q1, q2, p2)) return true;
    return false;
}

double point_segment_distance(const cplx& p, const cplx& a, const cplx& b) {
    const cplx d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p - a) * std::conj(d)).real() / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

// ---------------------------------------------------------------- PolyCurve

PolyCurve::PolyCurve(std::vector<cplx> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) throw Error(ErrorCode::Validation, "a polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const cplx& z = vertices_[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw Error(ErrorCode::Validation, "polygon vertex " + std::to_string(i) + " is not finite");
        if (z == vertices_[(i + 1) % vertices_.size()])
            throw Error(ErrorCode::Validation, "consecutive polygon vertices " + std::to_string(i) + " coincide");
    }
}

PolyCurve PolyCurve::refined() const {
    std::vector<cplx> out;
    out.reserve(2 * vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const cplx& a = vertices_[i];
        const cplx& b = vertices_[(i + 1) % vertices_.size()];
        out.push_back(a);
        out.push_back(0.5 * (a + b));
    }
    return PolyCurve(std::move(out));
}

PolyCurve PolyCurve::with_clearance(double c) const {
    PolyCurve p = *this;
    p.min_clearance_ = c;
    return p;
}

PolyCurve circle_curve(const cplx& center, double radius, int n_samples) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw Error(ErrorCode::Validation, "circle radius must be positive");
    if (n_samples < 3) throw Error(ErrorCode::Validation, "a circle needs at least 3 samples");
    std::vector<cplx> v;
    v.reserve(static_cast<std::size_t>(n_samples));
    const double two_pi = 6.283185307179586;
    for (int k = 0; k < n_samples; ++k) v.push_back(center + std::polar(radius, two_pi * k / n_samples));
    return PolyCurve(std::move(v));
}

bool is_simple(const std::vector<cplx>& v) {
    const std::size_t n = v.size();
    if (n < 3) return false;
    auto edge_a = [&](std::size_t i) -> const cplx& { return v[i]; };
    auto edge_b = [&](std::size_t i) -> const cplx& { return v[(i + 1) % n]; };

    // Consecutive edges meet at their shared vertex; they must not fold back.
    for (std::size_t i = 0; i < n; ++i) {
        const cplx& a = edge_a(i);
        const cplx& b = edge_b(i);
        const cplx& c = v[(i + 2) % n];
        if (orient2d(a, b, c) == 0) {
            const double ab = a.real() != b.real() ? a.real() - b.real() : a.imag() - b.imag();
            const double cb = a.real() != b.real() ? c.real() - b.real() : c.imag() - b.imag();
            if ((ab > 0) == (cb > 0) && cb != 0.0) return false;
        }
    }
    if (n == 3) return true;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> xmin(n), xmax(n), ymin(n), ymax(n);
    for (std::size_t i = 0; i < n; ++i) {
        xmin[i] = std::min(edge_a(i).real(), edge_b(i).real());
        xmax[i] = std::max(edge_a(i).real(), edge_b(i).real());
        ymin[i] = std::min(edge_a(i).imag(), edge_b(i).imag());
        ymax[i] = std::max(edge_a(i).imag(), edge_b(i).imag());
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xmin[a] < xmin[b]; });
    for (std::size_t oi = 0; oi < n; ++oi) {
        const std::size_t i = order[oi];
        for (std::size_t oj = oi + 1; oj < n && xmin[order[oj]] <= xmax[i]; ++oj) {
            const std::size_t j = order[oj];
            if ((i + 1) % n == j || (j + 1) % n == i) continue;
            if (ymax[i] < ymin[j] || ymax[j] < ymin[i]) continue;
            if (segments_intersect(edge_a(i), edge_b(i), edge_a(j), edge_b(j))) return false;
        }
    }
    return true;
}

double clearance_tolerance(const MarkedSet& marks, double rel) { return rel * marks.diameter(); }

PolyCurve validate(const PolyCurve& curve, const MarkedSet& marks, double rel) {
    if (!is_simple(curve.vertices())) throw Error(ErrorCode::NonSimple, "polygon intersects itself");
    const double tol = clearance_tolerance(marks, rel);
    const auto& v = curve.vertices();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : marks.points()) {
        if (p.pos.is_inf()) continue;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double d = point_segment_distance(p.pos.value(), v[i], v[(i + 1) % v.size()]);
            if (d <= tol)
                throw Error(ErrorCode::Clearance, "marked point '" + p.label + "' lies within " + format_double(tol) +
                                                      " of edge " + std::to_string(i));
            best = std::min(best, d);
        }
    }
    return curve.with_clearance(best);
}

int winding_number(const std::vector<cplx>& v, const cplx& p) {
    int wn = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const cplx& a = v[i];
        const cplx& b = v[(i + 1) % v.size()];
        if (a.imag() <= p.imag()) {
            if (b.imag() > p.imag() && orient2d(a, b, p) > 0) ++wn;
        } else if (b.imag() <= p.imag() && orient2d(a, b, p) < 0) {
            --wn;
        }
    }
    return wn;
}

bool disjoint(const PolyCurve& a, const PolyCurve& b) {
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    for (std::size_t i = 0; i < va.size(); ++i) {
        const cplx& p1 = va[i];
        const cplx& p2 = va[(i + 1) % va.size()];
        const double x0 = std::min(p1.real(), p2.real()), x1 = std::max(p1.real(), p2.real());
        const double y0 = std::min(p1.imag(), p2.imag()), y1 = std::max(p1.imag(), p2.imag());
        for (std::size_t j = 0; j < vb.size(); ++j) {
            const cplx& q1 = vb[j];
            const cplx& q2 = vb[(j + 1) % vb.size()];
            if (std::max(q1.real(), q2.real()) < x0 || std::min(q1.real(), q2.real()) > x1) continue;
            if (std::max(q1.imag(), q2.imag()) < y0 || std::min(q1.imag(), q2.imag()) > y1) continue;
            if (segments_intersect(p1, p2, q1, q2)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- words

Word free_reduce(const Word& w) {
    Word out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == -r[j - 1]) {
        ++i;
        --j;
    }
    return Word(r.begin() + static_cast<std::ptrdiff_t>(i), r.begin() + static_cast<std::ptrdiff_t>(j));
}

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

namespace {

bool is_rotation(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    for (std::size_t s = 0; s < n; ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = a[(i + s) % n] == b[i];
        if (ok) return true;
    }
    return n == 0;
}

}  // namespace

bool cyclically_equivalent(const Word& a, const Word& b) { return is_rotation(a, b) || is_rotation(a, inverse(b)); }

const char* curve_kind_name(CurveKind k) {
    switch (k) {
        case CurveKind::Trivial: return "trivial";
        case CurveKind::Peripheral: return "peripheral";
        case CurveKind::Essential: return "essential";
    }
    return "?";
}

std::vector<std::size_t> generator_order(const MarkedSet& marks) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (marks[i].pos.is_finite()) idx.push_back(i);
    }
    const double angle = marks.chart_angle();
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return rotate_to_chart(marks[a].pos.value(), angle).real() < rotate_to_chart(marks[b].pos.value(), angle).real();
    });
    return idx;
}

namespace {

// Rewrites the last generator as the inverse product of the others when
// infinity is not marked.
Word substitute_last(const Word& w, const MarkedSet& marks) {
    if (marks.has_infinity()) return w;
    const auto gens = generator_order(marks);
    if (gens.empty()) return {};
    const int last = static_cast<int>(gens.back()) + 1;
    Word out;
    for (int l : w) {
        if (l == last) {
            for (auto it = gens.rbegin() + 1; it != gens.rend(); ++it) out.push_back(-(static_cast<int>(*it) + 1));
        } else if (l == -last) {
            for (std::size_t i = 0; i + 1 < gens.size(); ++i) out.push_back(static_cast<int>(gens[i]) + 1);
        } else {
            out.push_back(l);
        }
    }
    return out;
}

}  // namespace

CurveClass::CurveClass(MarkedSet marks, Word word, std::vector<std::string> inside)
    : marks_(std::move(marks)), inside_(std::move(inside)) {
    for (int l : word) {
        if (l == 0 || static_cast<std::size_t>(std::abs(l)) > marks_.size() ||
            marks_[static_cast<std::size_t>(std::abs(l) - 1)].pos.is_inf())
            throw Error(ErrorCode::Validation, "word letter " + std::to_string(l) + " names no finite marked point");
    }
    word_ = cyclic_reduce(substitute_last(word, marks_));
    classify();
}

void CurveClass::classify() {
    peripheral_label_.clear();
    if (word_.empty()) {
        kind_ = CurveKind::Trivial;
        return;
    }
    if (word_.size() == 1) {
        kind_ = CurveKind::Peripheral;
        peripheral_label_ = marks_[static_cast<std::size_t>(std::abs(word_[0]) - 1)].label;
        return;
    }
    auto gens = generator_order(marks_);
    std::string around;
    if (marks_.has_infinity()) {
        for (const auto& p : marks_.points()) {
            if (p.pos.is_inf()) around = p.label;
        }
    } else {
        around = marks_[gens.back()].label;
        gens.pop_back();
    }
    Word full;
    for (auto g : gens) full.push_back(static_cast<int>(g) + 1);
    if (cyclically_equivalent(word_, full)) {
        kind_ = CurveKind::Peripheral;
        peripheral_label_ = around;
        return;
    }
    kind_ = CurveKind::Essential;
}

std::vector<std::string> CurveClass::outside() const {
    std::vector<std::string> out;
    for (const auto& p : marks_.points()) {
        if (std::find(inside_.begin(), inside_.end(), p.label) == inside_.end()) out.push_back(p.label);
    }
    return out;
}

std::string CurveClass::word_string() const {
    if (word_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < word_.size();) {
        std::size_t j = i;
        while (j < word_.size() && word_[j] == word_[i]) ++j;
        const int exp = static_cast<int>(j - i) * (word_[i] > 0 ? 1 : -1);
        if (!s.empty()) s += ' ';
        s += "x" + marks_[static_cast<std::size_t>(std::abs(word_[i]) - 1)].label;
        if (exp != 1) s += "^" + std::to_string(exp);
        i = j;
    }
    return s;
}

CurveClass curve_word(const PolyCurve& curve, const MarkedSet& marks, double rel) {
    const double tol = clearance_tolerance(marks, rel);
    const double angle = marks.chart_angle();
    std::vector<cplx> v;
    v.reserve(curve.size());
    for (const auto& z : curve.vertices()) v.push_back(rotate_to_chart(z, angle));

    struct Ray {
        std::size_t index;
        cplx at;
    };
    std::vector<Ray> rays;
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (marks[i].pos.is_finite()) rays.push_back({i, rotate_to_chart(marks[i].pos.value(), angle)});
    }

    Word raw;
    std::vector<int> count(marks.size(), 0);
    std::vector<std::pair<double, int>> hits;
    for (std::size_t e = 0; e < v.size(); ++e) {
        const cplx& a = v[e];
        const cplx& b = v[(e + 1) % v.size()];
        hits.clear();
        for (const auto& r : rays) {
            // A vertex exactly on the ray's line counts as lying east of it.
            const bool ea = a.real() >= r.at.real();
            const bool eb = b.real() >= r.at.real();
            if (ea == eb) continue;
            const double t = (r.at.real() - a.real()) / (b.real() - a.real());
            const double y = a.imag() + t * (b.imag() - a.imag());
            if (std::abs(y - r.at.imag()) <= tol)
                throw Error(ErrorCode::Clearance, "curve crosses the cut line within tolerance of '" + marks[r.index].label + "'");
            if (y > r.at.imag()) continue;
            const int letter = static_cast<int>(r.index) + 1;
            hits.emplace_back(t, eb ? letter : -letter);
            ++count[r.index];
        }
        std::sort(hits.begin(), hits.end());
        for (const auto& h : hits) raw.push_back(h.second);
    }
    std::vector<std::string> inside;
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (count[i] % 2 == 1) inside.push_back(marks[i].label);
    }
    return CurveClass(marks, raw, std::move(inside));
}

bool class_equal(const CurveClass& a, const CurveClass& b) {
    if (!a.marks().same_as(b.marks()))
        throw Error(ErrorCode::MarkedSetMismatch, "classes are defined relative to different marked sets");
    return cyclically_equivalent(a.word(), b.word());
}

CurveClass forget(const CurveClass& a, const MarkedSet& subset) {
    if (!a.marks().contains_all(subset)) throw Error(ErrorCode::NotSubset, "target set is not a subset of the class's marked set");
    if (a.marks().chart_angle() != subset.chart_angle())
        throw Error(ErrorCode::MarkedSetMismatch, "subset does not share the chart of the class's marked set");
    Word w;
    for (int l : a.word()) {
        const auto& label = a.marks()[static_cast<std::size_t>(std::abs(l) - 1)].label;
        if (auto j = subset.index_of(label)) w.push_back((l > 0 ? 1 : -1) * (static_cast<int>(*j) + 1));
    }
    std::vector<std::string> inside;
    for (const auto& l : a.inside()) {
        if (subset.index_of(l)) inside.push_back(l);
    }
    return CurveClass(subset, std::move(w), std::move(inside));
}

Multicurve::Multicurve(std::vector<LabelledCurve> curves) : curves_(std::move(curves)) {
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        if (!curves_[i].cls.is_essential())
            throw Error(ErrorCode::Validation, "multicurve member '" + curves_[i].label + "' is " +
                                                   curve_kind_name(curves_[i].cls.kind()));
        for (std::size_t j = 0; j < i; ++j) {
            if (!disjoint(curves_[i].curve, curves_[j].curve))
                throw Error(ErrorCode::Validation, "curves '" + curves_[j].label + "' and '" + curves_[i].label + "' intersect");
            if (class_equal(curves_[i].cls, curves_[j].cls))
                throw Error(ErrorCode::Validation, "curves '" + curves_[j].label + "' and '" + curves_[i].label +
                                                       "' are homotopic");
        }
    }
}

// ---------------------------------------------------------------- recharting

ComplexVal mobius_rechart(const ComplexVal& z, const cplx& p) {
    if (z.is_inf()) return ComplexVal(cplx(0.0));
    if (z.value() == p) return ComplexVal::infinity();
    return ComplexVal(1.0 / (z.value() - p));
}

MarkedSet mobius_rechart(const MarkedSet& marks, const cplx& p) {
    std::vector<MarkedPoint> pts;
    for (const auto& m : marks.points()) pts.push_back({m.label, mobius_rechart(m.pos, p)});
    return MarkedSet(std::move(pts));
}

PolyCurve mobius_rechart(const PolyCurve& curve, const cplx& p) {
    std::vector<cplx> v;
    for (const auto& z : curve.vertices()) {
        if (z == p) throw Error(ErrorCode::Validation, "recharting point lies on the curve");
        v.push_back(1.0 / (z - p));
    }
    return PolyCurve(std::move(v));
}

}  // namespace pernloci
