#include "pernloci/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "pernloci/svg.hpp"

namespace pernloci {

json rational_json(const Rational& r) { return r.str(); }

json matrix_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json class_json(const CurveClass& c) {
    json j = {{"word", c.word_string()}, {"kind", curve_kind_name(c.kind())}, {"inside", c.inside()}, {"outside", c.outside()}};
    if (c.is_peripheral()) j["peripheral_about"] = c.peripheral_label();
    return j;
}

json error_json(const Error& e) { return {{"error", error_name(e.code())}, {"message", e.what()}}; }

namespace {

bool looks_rational(const std::string& s) { return s.find(',') == std::string::npos && s.find("inf") == std::string::npos; }

json exact_point(const Extended<Rational>& z) { return z.is_inf() ? json("inf") : json(z.value().str()); }

}  // namespace

json report_pern_poly(int n, bool reduced, const std::function<void(const std::string&)>& warn) {
    json j = {{"n", n}};
    if (reduced) {
        const auto parts = reduced_parts_upto(n);
        j["p_red"] = parts.back().first.str();
        j["q_red"] = parts.back().second.str();
        return j;
    }
    PernBuildOptions opts;
    opts.warn = warn;
    const auto r = build_pern(n, opts);
    j["P"] = r.P.str();
    j["Q"] = r.Q.str();
    j["p"] = r.p.str();
    j["q"] = r.q.str();
    j["p_red"] = r.p_red.str();
    j["q_red"] = r.q_red.str();
    j["deg_P"] = r.P.degree();
    j["deg_Q"] = r.Q.degree();
    return j;
}

json report_pern_roots(int n) {
    json arr = json::array();
    std::size_t idx = 0;
    for (const auto& d : asymptotic_directions(n)) {
        arr.push_back({{"index", idx++},
                       {"alpha", point_json(ComplexVal(d.alpha))},
                       {"multiplicity", d.multiplicity},
                       {"residual", d.residual},
                       {"inherited", d.inherited()},
                       {"inherited_from", d.inherited_from}});
    }
    return {{"n", n}, {"directions", arr}};
}

json report_pern_solve(int n, std::size_t alpha_index, const cplx& c) {
    const auto dirs = asymptotic_directions(n);
    if (alpha_index >= dirs.size())
        throw Error(ErrorCode::Validation, "alpha index " + std::to_string(alpha_index) + " out of range (" +
                                               std::to_string(dirs.size()) + " directions)");
    const auto r = solve_pern_near_direction(n, dirs[alpha_index].alpha, c);
    json orbit = json::array();
    for (const auto& z : r.orbit) orbit.push_back(point_json(z));
    return {{"n", n},
            {"alpha_index", alpha_index},
            {"alpha", point_json(ComplexVal(r.alpha))},
            {"b", point_json(ComplexVal(r.b))},
            {"c", point_json(ComplexVal(r.c))},
            {"iterations", r.iterations},
            {"residual_ratio", r.residual_ratio},
            {"exact_period", r.exact_period},
            {"orbit", orbit},
            {"v", point_json(r.v)},
            {"v_min_distance", r.v_min_distance},
            {"in_pern_prime", r.in_pern_prime}};
}

json report_per4_param(const std::string& rho, double tol) {
    if (looks_rational(rho)) {
        const auto pt = per4_from_rho(Rational::parse(rho));
        const auto check = check_pern_prime(pt.map(), 4);
        json orbit = json::array();
        for (const auto& z : pernloci::orbit(pt.map(), Extended<Rational>(Rational(0)), 4)) orbit.push_back(exact_point(z));
        return {{"kind", "exact"},
                {"rho", pt.rho.str()},
                {"b", pt.b.str()},
                {"c", pt.c.str()},
                {"z_crit", exact_point(pt.z_crit)},
                {"v", exact_point(pt.v)},
                {"v_expanded", exact_point(pt.v_expanded)},
                {"v_forms_agree", pt.v == pt.v_expanded},
                {"orbit", orbit},
                {"cycle_closes", check.cycle_closes},
                {"P4_vanishes", build_pern(4).P.eval(pt.b, pt.c).is_zero()},
                {"in_per4_prime", pt.in_per4_prime}};
    }
    const ComplexVal r = parse_complex(rho);
    if (r.is_inf()) throw Error(ErrorCode::ExcludedRho, "rho must avoid 0, 1, 1/2, and infinity");
    const auto pt = per4_from_rho(r.value(), tol);
    const auto check = check_pern_prime(pt.map(), 4, tol);
    json orbit = json::array();
    for (const auto& z : check.orbit) orbit.push_back(point_json(z));
    return {{"kind", "float"},
            {"rho", point_json(ComplexVal(pt.rho))},
            {"b", point_json(ComplexVal(pt.b))},
            {"c", point_json(ComplexVal(pt.c))},
            {"z_crit", point_json(pt.z_crit)},
            {"v", point_json(pt.v)},
            {"v_expanded", point_json(pt.v_expanded)},
            {"v_forms_agree", chordal(pt.v, pt.v_expanded) <= tol},
            {"orbit", orbit},
            {"cycle_closes", check.cycle_closes},
            {"in_per4_prime", pt.in_per4_prime}};
}

json report_per4_punctures() {
    json arr = json::array();
    for (const auto& p : per4_puncture_analysis()) {
        json rhos = json::array();
        for (const auto& r : p.rho_values) rhos.push_back(point_json(ComplexVal(r)));
        json pairs = json::array();
        for (const auto& [a, b] : p.collision_pairs()) pairs.push_back({a, b});
        arr.push_back({{"puncture", p.puncture},
                       {"defining_polynomial", p.defining_polynomial},
                       {"rho_values", rhos},
                       {"clusters", p.clusters},
                       {"collisions", pairs},
                       {"pinching_curves", p.pinching_curves},
                       {"asymptotics", p.asymptotics}});
    }
    return {{"punctures", arr}};
}

json report_per3_fiber(const std::string& v) {
    json maps = json::array();
    if (looks_rational(v)) {
        const Rational vq = Rational::parse(v);
        if (auto fib = per3_fiber_exact(vq)) {
            for (const auto& f : fib->maps) {
                const auto chk = check_pern_prime(f, 3);
                maps.push_back({{"b", f.b().str()},
                                {"c", f.c().str()},
                                {"crit2", exact_point(f.crit2())},
                                {"v", exact_point(f.critical_value())},
                                {"cycle_closes", chk.cycle_closes},
                                {"f_of_1", exact_point(f(Extended<Rational>(Rational(1))))}});
            }
            return {{"kind", "exact"}, {"v", vq.str()}, {"maps", maps}, {"moduli_configuration", {"0", "1", "inf", vq.str()}}};
        }
    }
    const ComplexVal vz = parse_complex(v);
    if (vz.is_inf()) throw Error(ErrorCode::DegenerateFiber, "v must be finite");
    const auto fib = per3_fiber(vz.value());
    for (const auto& f : fib.maps) {
        const auto chk = check_pern_prime(f, 3);
        maps.push_back({{"b", point_json(ComplexVal(f.b()))},
                        {"c", point_json(ComplexVal(f.c()))},
                        {"crit2", point_json(f.crit2())},
                        {"v", point_json(f.critical_value())},
                        {"cycle_closes", chk.cycle_closes},
                        {"f_of_1", point_json(f(ComplexVal(cplx(1.0))))}});
    }
    return {{"kind", "float"}, {"v", point_json(vz)}, {"maps", maps}, {"moduli_configuration", {"0", "1", "inf", point_json(vz)}}};
}

json report_params_from_rho_s(const std::string& rho, const std::string& s) {
    if (looks_rational(rho) && looks_rational(s)) {
        const auto [b, c] = params_from_rho_s(Rational::parse(rho), Rational::parse(s));
        return {{"b", b.str()}, {"c", c.str()}};
    }
    const auto r = parse_complex(rho), t = parse_complex(s);
    if (r.is_inf() || t.is_inf()) throw Error(ErrorCode::Validation, "rho and s must be finite");
    const auto [b, c] = params_from_rho_s(r.value(), t.value());
    return {{"b", point_json(ComplexVal(b))}, {"c", point_json(ComplexVal(c))}};
}

std::vector<std::string> orbit_lines(const std::string& b, const std::string& c, const std::string& z0, int steps) {
    std::vector<std::string> out;
    if (looks_rational(b) && looks_rational(c) && (looks_rational(z0) || z0 == "inf")) {
        const QuadMap<Rational> f(Rational::parse(b), Rational::parse(c));
        const auto start = z0 == "inf" ? Extended<Rational>::infinity() : Extended<Rational>(Rational::parse(z0));
        for (const auto& z : orbit(f, start, steps)) out.push_back(format_complex(to_complex_val(z)));
        return out;
    }
    const auto bz = parse_complex(b), cz = parse_complex(c);
    if (bz.is_inf() || cz.is_inf()) throw Error(ErrorCode::Validation, "b and c must be finite");
    const QuadMap<cplx> f(bz.value(), cz.value());
    for (const auto& z : orbit(f, parse_complex(z0), steps)) out.push_back(format_complex(z));
    return out;
}

bool isotopy_stable(const PolyCurve& curve, const MarkedSet& marks, int trials, std::uint64_t seed, double clearance_rel) {
    const PolyCurve base = validate(curve, marks, clearance_rel);
    const CurveClass ref = curve_word(base, marks, clearance_rel);
    // Stay below half the clearance and below half the polygon's own feature size,
    // so the moved polygon is usually still simple.
    const auto& bv = base.vertices();
    const std::size_t nv = bv.size();
    double feature = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nv; ++i) {
        const cplx a = bv[i], b = bv[(i + 1) % nv];
        feature = std::min(feature, std::abs(b - a));
        for (std::size_t j = i + 2; j < nv; ++j) {
            if (i == 0 && j == nv - 1) continue;
            const cplx c = bv[j], d = bv[(j + 1) % nv];
            feature = std::min({feature, point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                                point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
        }
    }
    const double radius = 0.49 * std::min(*base.min_clearance(), 0.5 * feature);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int done = 0;
    for (int attempt = 0; done < trials && attempt < 20 * trials; ++attempt) {
        std::vector<cplx> v = base.vertices();
        for (auto& z : v) z += std::polar(radius * std::sqrt(unit(rng)), 6.283185307179586 * unit(rng));
        PolyCurve moved;
        try {
            moved = validate(PolyCurve(v), marks, clearance_rel);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NonSimple || e.code() == ErrorCode::Validation) continue;
            throw;
        }
        if (!class_equal(curve_word(moved, marks, clearance_rel), ref)) return false;
        ++done;
    }
    if (done < trials) throw Error(ErrorCode::Validation, "could not draw enough simple perturbations");
    return true;
}

json report_pullback(const Scenario& s, const PullbackRequest& req) {
    const auto& sc = s.curve(req.label);
    TraceOptions opts;
    opts.clearance_rel = s.clearance_rel;
    const auto r = trace_preimage(s.map, sc.curve, s.A, s.B, opts);
    json comps = json::array();
    for (const auto& c : r.components) {
        comps.push_back({{"degree", c.degree},
                         {"class_rel_A", class_json(c.cls)},
                         {"essential", c.essential()},
                         {"vertices", c.curve.size()}});
    }
    json j = {{"curve", req.label},
              {"class_rel_B", class_json(s.class_rel_B(req.label))},
              {"forget_rel_A", class_json(forget(s.class_rel_B(req.label), s.A))},
              {"monodromy", r.swap ? "swap" : "identity"},
              {"components", comps},
              {"steps", r.steps},
              {"max_bisection_depth", r.max_bisection_depth},
              {"composition_error", composition_error(s.map, r, sc.curve)}};
    if (req.perturbations > 0) {
        j["perturbations"] = req.perturbations;
        j["seed"] = req.seed;
        j["isotopy_stable"] = isotopy_stable(sc.curve, s.B, req.perturbations, req.seed, s.clearance_rel);
    }
    return j;
}

json report_equalize(const Scenario& s, const std::vector<std::string>& labels, bool try_subsets, bool twists) {
    const Multicurve gamma = s.multicurve(labels);
    TraceOptions opts;
    opts.clearance_rel = s.clearance_rel;
    const ThurstonData data = thurston_matrices(s.map, gamma, s.A, s.B, opts);
    const EqualizeOutcome out = equalizing_solve(data, try_subsets);

    json delta = json::array();
    for (const auto& d : data.delta_classes) delta.push_back(class_json(d));
    json gammas = json::array();
    for (std::size_t j = 0; j < data.gamma_labels.size(); ++j)
        gammas.push_back({{"label", data.gamma_labels[j]}, {"class_rel_B", class_json(data.gamma_classes[j])},
                          {"preimage_degrees", data.component_degrees[j]}});
    json basis = json::array();
    for (const auto& v : out.nullspace_basis) {
        json col = json::array();
        for (const auto& x : v) col.push_back(x.str());
        basis.push_back(col);
    }
    json j = {{"multicurve", labels},
              {"gamma", gammas},
              {"delta", delta},
              {"T", matrix_json(data.T)},
              {"I", matrix_json(data.I)},
              {"nullspace", basis},
              {"positive_solution", out.positive_solution},
              {"nonnegative_solution", out.nonnegative_solution},
              {"from_subset", out.from_subset},
              {"certificate", nullptr}};
    if (out.nonnegative_m) {
        json m = json::array();
        for (const auto& x : *out.nonnegative_m) m.push_back(x.str());
        j["nonnegative_m"] = m;
    }
    if (out.certificate) {
        const auto& c = *out.certificate;
        json m = json::array();
        for (const auto& x : c.m) m.push_back(x.str());
        j["certificate"] = {{"labels", c.labels}, {"m", m}, {"kind", c.kind}, {"verified", c.verified},
                            {"T", matrix_json(c.T)}, {"I", matrix_json(c.I)}};
        if (twists) {
            std::vector<std::vector<int>> degs;
            for (const auto& l : c.labels) {
                const auto it = std::find(data.gamma_labels.begin(), data.gamma_labels.end(), l);
                degs.push_back(data.component_degrees[static_cast<std::size_t>(it - data.gamma_labels.begin())]);
            }
            const auto tc = twist_certificate(c, degs);
            json lcm = json::array();
            for (const auto& L : tc.lcm_degrees) lcm.push_back(L.get_str());
            j["twist"] = {{"word", tc.str()}, {"scale", tc.scale.get_str()}, {"lcm_degrees", lcm}};
        }
    } else if (twists) {
        j["twist"] = nullptr;
    }
    return j;
}

std::string plot_scenario(const Scenario& s, const std::vector<std::string>& preimage_labels) {
    std::vector<SvgLayer> layers;
    for (const auto& c : s.curves) layers.push_back({c.label, {c.curve.vertices()}, false});
    TraceOptions opts;
    opts.clearance_rel = s.clearance_rel;
    for (const auto& l : preimage_labels) {
        const auto r = trace_preimage(s.map, s.curve(l).curve, s.A, s.B, opts);
        SvgLayer layer{l, {}, true};
        for (const auto& c : r.components) layer.polygons.push_back(c.curve.vertices());
        layers.push_back(std::move(layer));
    }
    return render_svg(s.B, layers, s.name);
}

}  // namespace pernloci
