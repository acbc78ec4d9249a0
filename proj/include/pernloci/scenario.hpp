#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pernloci/curves.hpp"
#include "pernloci/pern.hpp"

namespace pernloci {

using json = nlohmann::json;

struct ScenarioCurve {
    std::string label;
    std::string source_kind;  ///< "polygon", "circle" or "image"
    PolyCurve curve;          ///< validated rel B
};

struct Scenario {
    std::string name;
    std::string map_kind;  ///< kind the map was given as
    QuadMap<cplx> map{cplx(0.0), cplx(1.0)};
    std::optional<QuadMap<Rational>> exact_map;
    /// Exact period of 0 when the critical orbit was resolved automatically.
    std::optional<int> period;
    json map_details;  ///< kind-specific diagnostics (rho, Newton data, ...)
    MarkedSet A;       ///< built as a subset of B so both share one chart
    MarkedSet B;
    std::vector<ScenarioCurve> curves;
    std::map<std::string, std::vector<std::string>> multicurves;
    double clearance_rel = kDefaultClearance;

    const ScenarioCurve& curve(const std::string& label) const;
    CurveClass class_rel_B(const std::string& label) const;
    /// Named multicurve, or a comma-free list of curve labels.
    Multicurve multicurve(const std::vector<std::string>& labels) const;
    std::vector<std::string> resolve_multicurve_name(const std::string& name_or_labels) const;
};

struct ScenarioOptions {
    double clearance_rel = kDefaultClearance;
};

Scenario parse_scenario(const json& j, const ScenarioOptions& opts = {});
Scenario load_scenario(const std::string& path, const ScenarioOptions& opts = {});

/// Resolved form: explicit map, explicit marked sets, polygon curves. Parsing it
/// reproduces every resolved value exactly.
json serialize_scenario(const Scenario& s);

/// "p/q" for exact values, 17 significant digits otherwise.
json point_json(const ComplexVal& z);
ComplexVal point_from_json(const json& j);
double number_from_json(const json& j);

/// Reduced-triple check B = A u f(A) u {inf, v}; throws NOT_REDUCED naming the first defect.
void check_reduced(const QuadMap<cplx>& f, const MarkedSet& A, const MarkedSet& B, double rel_tol = 1e-9);

}  // namespace pernloci
