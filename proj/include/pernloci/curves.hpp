#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pernloci/dynamics.hpp"

namespace pernloci {

inline constexpr double kDefaultClearance = 1e-6;

/// Sign of the orientation of (a, b, c): +1 counterclockwise, -1 clockwise, 0 collinear.
/// Exact on the given double coordinates.
int orient2d(const cplx& a, const cplx& b, const cplx& c);
/// Closed segments [p1, p2] and [q1, q2] share a point (exact).
bool segments_intersect(const cplx& p1, const cplx& p2, const cplx& q1, const cplx& q2);
double point_segment_distance(const cplx& p, const cplx& a, const cplx& b);

/// Closed polygon; the last vertex connects back to the first.
class PolyCurve {
public:
    PolyCurve() = default;
    /// Checks vertex count, finiteness, and distinct consecutive vertices.
    explicit PolyCurve(std::vector<cplx> vertices);

    const std::vector<cplx>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    /// Smallest distance from a marked point to an edge, set by validate().
    std::optional<double> min_clearance() const { return min_clearance_; }

    /// Inserts the midpoint of every edge.
    PolyCurve refined() const;
    PolyCurve with_clearance(double c) const;

private:
    std::vector<cplx> vertices_;
    std::optional<double> min_clearance_;
};

/// Regular counterclockwise n-gon inscribed in the circle.
PolyCurve circle_curve(const cplx& center, double radius, int n_samples);

bool is_simple(const std::vector<cplx>& vertices);

/// Absolute clearance tolerance: rel times the diameter of the finite marked points.
double clearance_tolerance(const MarkedSet& marks, double rel = kDefaultClearance);

/// Checks simplicity (NON_SIMPLE) and clearance from every finite marked point (CLEARANCE);
/// returns the curve with its clearance recorded.
PolyCurve validate(const PolyCurve& curve, const MarkedSet& marks, double rel = kDefaultClearance);

/// Winding number of the polygon around p (p must not lie on it).
int winding_number(const std::vector<cplx>& vertices, const cplx& p);

bool disjoint(const PolyCurve& a, const PolyCurve& b);

/// A letter is +-(i + 1) for the loop around the i-th marked point of the set.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
/// Equal up to cyclic rotation and global inversion (inputs cyclically reduced).
bool cyclically_equivalent(const Word& a, const Word& b);

enum class CurveKind { Trivial, Peripheral, Essential };
const char* curve_kind_name(CurveKind k);

/// Free-homotopy class of a closed curve in the sphere minus a marked set.
///
/// Cut rays run vertically downward (in the set's chart) from every finite
/// marked point; an eastward crossing of the ray at p reads x_p, a westward one
/// x_p^-1. The loop around infinity is the product of the x_p in order of
/// increasing chart real part. When infinity is not marked the last of these
/// generators is rewritten as the inverse product of the others, so words live
/// in a free group.
class CurveClass {
public:
    CurveClass(MarkedSet marks, Word word, std::vector<std::string> inside);

    const MarkedSet& marks() const { return marks_; }
    const Word& word() const { return word_; }
    /// Labels of marked points enclosed by the curve in the chart (odd crossing count).
    const std::vector<std::string>& inside() const { return inside_; }
    std::vector<std::string> outside() const;

    CurveKind kind() const { return kind_; }
    bool is_trivial() const { return kind_ == CurveKind::Trivial; }
    bool is_peripheral() const { return kind_ == CurveKind::Peripheral; }
    bool is_essential() const { return kind_ == CurveKind::Essential; }
    /// Label of the point a peripheral curve surrounds.
    const std::string& peripheral_label() const { return peripheral_label_; }

    /// Words print with marked-point labels, e.g. "x0 xv^-1".
    std::string word_string() const;

private:
    void classify();
    MarkedSet marks_;
    Word word_;
    std::vector<std::string> inside_;
    CurveKind kind_ = CurveKind::Trivial;
    std::string peripheral_label_;
};

/// Finite marked-point indices ordered by increasing chart real part.
std::vector<std::size_t> generator_order(const MarkedSet& marks);

/// Crossing sequence of a validated curve with the cut rays, freely and cyclically reduced.
CurveClass curve_word(const PolyCurve& curve, const MarkedSet& marks, double rel = kDefaultClearance);

/// Throws MARKED_SET_MISMATCH when the classes live on different marked sets.
bool class_equal(const CurveClass& a, const CurveClass& b);

/// Image of the class under the forgetful map to a subset (same chart). Throws NOT_SUBSET.
CurveClass forget(const CurveClass& a, const MarkedSet& subset);

struct LabelledCurve {
    std::string label;
    PolyCurve curve;
    CurveClass cls;
};

/// Pairwise disjoint curves with distinct essential classes.
class Multicurve {
public:
    Multicurve() = default;
    /// Throws VALIDATION when the curves intersect, repeat a class, or are inessential.
    explicit Multicurve(std::vector<LabelledCurve> curves);
    const std::vector<LabelledCurve>& curves() const { return curves_; }
    std::size_t size() const { return curves_.size(); }

private:
    std::vector<LabelledCurve> curves_;
};

/// z -> 1 / (z - p): moves p to infinity and infinity to 0.
ComplexVal mobius_rechart(const ComplexVal& z, const cplx& p);
MarkedSet mobius_rechart(const MarkedSet& marks, const cplx& p);
/// Throws VALIDATION if p is a vertex.
PolyCurve mobius_rechart(const PolyCurve& curve, const cplx& p);

}  // namespace pernloci
