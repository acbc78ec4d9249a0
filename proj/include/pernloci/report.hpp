#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pernloci/pullback.hpp"
#include "pernloci/scenario.hpp"

namespace pernloci {

json rational_json(const Rational& r);
json matrix_json(const RationalMatrix& m);
json class_json(const CurveClass& c);
json error_json(const Error& e);

json report_pern_poly(int n, bool reduced, const std::function<void(const std::string&)>& warn = {});
json report_pern_roots(int n);
json report_pern_solve(int n, std::size_t alpha_index, const cplx& c);
/// rho as "p/q" (exact) or "re,im" (float).
json report_per4_param(const std::string& rho, double tol = 1e-9);
json report_per4_punctures();
json report_per3_fiber(const std::string& v);
json report_params_from_rho_s(const std::string& rho, const std::string& s);

/// Orbit points as decimal strings ("inf" for infinity); exact arithmetic when
/// every input is rational.
std::vector<std::string> orbit_lines(const std::string& b, const std::string& c, const std::string& z0, int steps);

struct PullbackRequest {
    std::string label;
    int perturbations = 0;
    std::uint64_t seed = 0;
};

json report_pullback(const Scenario& s, const PullbackRequest& req);

/// Traces every member, builds T and I, and solves for weights; with
/// twists also emits the liftable twist word.
json report_equalize(const Scenario& s, const std::vector<std::string>& labels, bool try_subsets, bool twists);

/// Scenario curves solid, and for each listed label its preimage components dashed.
std::string plot_scenario(const Scenario& s, const std::vector<std::string>& preimage_labels);

/// Random vertex perturbations smaller than half the clearance leave the class unchanged.
bool isotopy_stable(const PolyCurve& curve, const MarkedSet& marks, int trials, std::uint64_t seed,
                    double clearance_rel = kDefaultClearance);

}  // namespace pernloci
