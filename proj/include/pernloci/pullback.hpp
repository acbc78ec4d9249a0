#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pernloci/curves.hpp"
#include "pernloci/linalg.hpp"

namespace pernloci {

struct TraceOptions {
    double clearance_rel = kDefaultClearance;
    /// A step is accepted when each branch moves at most this fraction of its
    /// distance to the nearest point of A or to the free critical point.
    double step_fraction = 0.1;
    /// ... and the two roots stay at least this many displacements apart.
    double separation_factor = 4.0;
    int max_bisections = 20;
};

struct PreimageComponent {
    PolyCurve curve;
    int degree = 1;
    CurveClass cls;  ///< class rel A
    bool essential() const { return cls.is_essential(); }
};

struct PreimageResult {
    std::vector<PreimageComponent> components;
    bool swap = false;  ///< monodromy of the two root branches around the curve
    std::size_t steps = 0;
    int max_bisection_depth = 0;
};

/// Lifts the curve through both branches of f^-1 by nearest-root continuation.
/// Requires B to contain both critical values (infinity and v).
PreimageResult trace_preimage(const QuadMap<cplx>& f, const PolyCurve& curve, const MarkedSet& A, const MarkedSet& B,
                              const TraceOptions& opts = {});

/// Largest chordal distance from f(w), w a vertex of a component, to the input polygon.
double composition_error(const QuadMap<cplx>& f, const PreimageResult& r, const PolyCurve& curve);

struct ThurstonData {
    std::vector<std::string> gamma_labels;
    std::vector<CurveClass> gamma_classes;  ///< rel B
    std::vector<CurveClass> delta_classes;  ///< rel A
    RationalMatrix T;                       ///< |Delta| x |Gamma|
    RationalMatrix I;
    /// Number of essential preimage components of gamma_j in the class delta_i.
    RationalMatrix counts;
    /// Degrees of every preimage component of each gamma_j, essential or not.
    std::vector<std::vector<int>> component_degrees;
    std::vector<PreimageResult> preimages;
};

ThurstonData thurston_matrices(const QuadMap<cplx>& f, const Multicurve& gamma, const MarkedSet& A,
                               const MarkedSet& B, const TraceOptions& opts = {});

/// Builds T and I from already traced preimages.
ThurstonData assemble_thurston(const Multicurve& gamma, std::vector<PreimageResult> preimages, const MarkedSet& A);

struct EqualizingCertificate {
    std::vector<std::string> labels;
    std::vector<Rational> m;  ///< coprime positive integers
    RationalMatrix T;
    RationalMatrix I;
    /// "equalizing" when f*Gamma = i_*Gamma as class multisets (component counts match
    /// the forgetful images row by row), else "arithmetically equalizing".
    std::string kind;
    bool verified = false;  ///< (T - I) m == 0 exactly
};

struct EqualizeOutcome {
    std::optional<EqualizingCertificate> certificate;
    bool positive_solution = false;
    /// Weaker verdict: a nonzero solution m >= 0 exists.
    bool nonnegative_solution = false;
    std::optional<std::vector<Rational>> nonnegative_m;
    std::vector<std::vector<Rational>> nullspace_basis;
    /// Set when the certificate came from a proper sub-multicurve.
    bool from_subset = false;
};

/// Positive rational m with (T - I) m = 0. With try_subsets, falls back to the
/// nonempty sub-multicurves, largest first.
EqualizeOutcome equalizing_solve(const ThurstonData& data, bool try_subsets = false);
/// Without component counts the unweighted condition is only decided for empty Delta.
EqualizeOutcome equalizing_solve(const RationalMatrix& T, const RationalMatrix& I, const std::vector<std::string>& labels,
                                 bool try_subsets = false, const std::optional<RationalMatrix>& counts = std::nullopt);

struct TwistCertificate {
    std::vector<std::pair<std::string, BigInt>> word;  ///< (label, exponent)
    BigInt scale = 1;                                  ///< lambda applied to m
    std::vector<BigInt> lcm_degrees;                   ///< L_i per curve

    std::string str() const;
};

/// Scales m by the least lambda with L_i | lambda m_i for every i, L_i the lcm of
/// the preimage degrees of gamma_i. Throws INSUFFICIENT on non-integer weights.
TwistCertificate twist_certificate(const EqualizingCertificate& cert, const std::vector<std::vector<int>>& degrees);

}  // namespace pernloci
