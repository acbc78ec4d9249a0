#include "pernloci/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace pernloci {

namespace {

std::optional<Rational> try_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) return std::nullopt;
    const auto s = j.get<std::string>();
    if (s.find(',') != std::string::npos || s.find("inf") != std::string::npos) return std::nullopt;
    try {
        return Rational::parse(s);
    } catch (const Error&) {
        return std::nullopt;
    }
}

cplx complex_from_json(const json& j, const std::string& what) {
    const ComplexVal z = point_from_json(j);
    if (z.is_inf()) throw Error(ErrorCode::Validation, what + " must be finite");
    return z.value();
}

const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::Validation, where + " is missing the field '" + std::string(key) + "'");
    return j.at(key);
}

std::string orbit_label(int k, int n) {
    if (k == 0) return "0";
    if (k == 1) return "inf";
    if (k == 2) return "1";
    return n == 4 ? "rho" : "rho" + std::to_string(k);
}

std::vector<MarkedPoint> orbit_points(const std::vector<ComplexVal>& orbit, int n) {
    std::vector<MarkedPoint> pts;
    for (int k = 0; k < n; ++k) pts.push_back({orbit_label(k, n), orbit[static_cast<std::size_t>(k)]});
    return pts;
}

// Critical orbit of 0 when it is periodic; exact when the map is exact.
std::optional<std::vector<ComplexVal>> periodic_orbit(const Scenario& s) {
    if (s.exact_map) {
        const auto pts = orbit(*s.exact_map, Extended<Rational>(Rational(0)), kPernHardLimit);
        for (std::size_t k = 1; k < pts.size(); ++k) {
            if (pts[k] == pts[0]) {
                std::vector<ComplexVal> out;
                for (std::size_t i = 0; i < k; ++i) out.push_back(to_complex_val(pts[i]));
                return out;
            }
        }
        return std::nullopt;
    }
    const auto pts = orbit(s.map, ComplexVal(cplx(0.0)), kPernHardLimit);
    for (std::size_t k = 1; k < pts.size(); ++k) {
        if (!relatively_distinct(pts[k], pts[0], 1e-9)) return std::vector<ComplexVal>(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return std::nullopt;
}

void resolve_map(Scenario& s, const json& m) {
    const std::string kind = require(m, "kind", "map").get<std::string>();
    s.map_kind = kind;
    if (kind == "per4_rho") {
        const json& rj = require(m, "rho", "per4_rho map");
        if (auto r = try_rational(rj)) {
            const auto pt = per4_from_rho(*r);
            s.exact_map = pt.map();
            s.map_details = {{"rho", r->str()}, {"z_crit", point_json(to_complex_val(pt.z_crit))},
                             {"v", point_json(to_complex_val(pt.v))}, {"in_per4_prime", pt.in_per4_prime}};
        } else {
            const auto pt = per4_from_rho(complex_from_json(rj, "rho"));
            s.map = pt.map();
            s.map_details = {{"rho", point_json(ComplexVal(pt.rho))}, {"z_crit", point_json(pt.z_crit)},
                             {"v", point_json(pt.v)}, {"in_per4_prime", pt.in_per4_prime}};
        }
        s.period = 4;
    } else if (kind == "explicit") {
        const json& bj = require(m, "b", "explicit map");
        const json& cj = require(m, "c", "explicit map");
        auto b = try_rational(bj);
        auto c = try_rational(cj);
        if (b && c) {
            s.exact_map = QuadMap<Rational>(*b, *c);
        } else {
            s.map = QuadMap<cplx>(complex_from_json(bj, "b"), complex_from_json(cj, "c"));
        }
        if (m.contains("period")) s.period = m.at("period").get<int>();
    } else if (kind == "pern_solve") {
        const int n = require(m, "n", "pern_solve map").get<int>();
        const auto idx = require(m, "alpha_index", "pern_solve map").get<std::size_t>();
        const cplx c = complex_from_json(require(m, "c", "pern_solve map"), "c");
        const auto dirs = asymptotic_directions(n);
        if (idx >= dirs.size())
            throw Error(ErrorCode::Validation, "alpha_index " + std::to_string(idx) + " out of range (" +
                                                   std::to_string(dirs.size()) + " directions)");
        const auto r = solve_pern_near_direction(n, dirs[idx].alpha, c);
        s.map = r.map();
        s.period = n;
        s.map_details = {{"n", n},
                         {"alpha_index", idx},
                         {"alpha", point_json(ComplexVal(r.alpha))},
                         {"iterations", r.iterations},
                         {"residual_ratio", r.residual_ratio},
                         {"in_pern_prime", r.in_pern_prime}};
    } else {
        throw Error(ErrorCode::Validation, "unknown map kind '" + kind + "'");
    }
    if (s.exact_map) s.map = s.exact_map->to_float();
}

std::vector<MarkedPoint> explicit_points(const json& j, const std::string& name) {
    if (!j.is_array()) throw Error(ErrorCode::Validation, "marked set " + name + " must be \"auto\" or a list");
    std::vector<MarkedPoint> pts;
    for (const auto& e : j) pts.push_back({require(e, "label", "marked point").get<std::string>(), point_from_json(require(e, "pos", "marked point"))});
    return pts;
}

std::optional<std::string> find_position(const std::vector<MarkedPoint>& pts, const ComplexVal& z, double tol) {
    for (const auto& p : pts) {
        if (same_position(p.pos, z, tol)) return p.label;
    }
    return std::nullopt;
}

void resolve_marked_sets(Scenario& s, const json& ms) {
    const json a_spec = ms.is_object() && ms.contains("A") ? ms.at("A") : json("auto");
    const json b_spec = ms.is_object() && ms.contains("B") ? ms.at("B") : json("auto");
    const bool a_auto = a_spec.is_string() && a_spec.get<std::string>() == "auto";
    const bool b_auto = b_spec.is_string() && b_spec.get<std::string>() == "auto";

    std::vector<MarkedPoint> a_pts;
    if (a_auto) {
        auto orb = periodic_orbit(s);
        if (!orb) throw Error(ErrorCode::Validation, "marked set A is \"auto\" but the critical point 0 is not periodic");
        if (s.period && static_cast<int>(orb->size()) != *s.period)
            throw Error(ErrorCode::Validation, "critical orbit has period " + std::to_string(orb->size()) + ", expected " +
                                                   std::to_string(*s.period));
        s.period = static_cast<int>(orb->size());
        a_pts = orbit_points(*orb, *s.period);
    } else {
        a_pts = explicit_points(a_spec, "A");
    }

    const ComplexVal v = s.exact_map ? to_complex_val(s.exact_map->critical_value()) : s.map.critical_value();
    std::vector<MarkedPoint> b_pts;
    std::vector<std::string> a_labels;
    if (b_auto) {
        b_pts = a_pts;
        for (const auto& p : a_pts) a_labels.push_back(p.label);
        auto add = [&](const std::string& label, const ComplexVal& z) {
            if (!find_position(b_pts, z, 1e-9)) b_pts.push_back({label, z});
        };
        for (const auto& p : a_pts) add("f(" + p.label + ")", s.map(p.pos));
        add("inf", ComplexVal::infinity());
        add("v", v);
    } else {
        b_pts = explicit_points(b_spec, "B");
        for (const auto& p : a_pts) {
            if (a_auto) {
                auto l = find_position(b_pts, p.pos, 1e-9);
                if (!l) throw Error(ErrorCode::NotReduced, "B misses the orbit point " + p.label + " = " + format_complex(p.pos));
                a_labels.push_back(*l);
            } else {
                auto it = std::find_if(b_pts.begin(), b_pts.end(), [&](const MarkedPoint& q) { return q.label == p.label; });
                if (it == b_pts.end() || !same_position(it->pos, p.pos, 1e-12))
                    throw Error(ErrorCode::Validation, "A point '" + p.label + "' does not appear in B at the same position");
                a_labels.push_back(p.label);
            }
        }
    }
    s.B = MarkedSet(std::move(b_pts));
    s.A = s.B.subset(a_labels);
    check_reduced(s.map, s.A, s.B);
}

PolyCurve curve_from_json(const Scenario& s, const json& c, std::string& kind) {
    kind = require(c, "kind", "curve").get<std::string>();
    if (kind == "circle") {
        const cplx center = complex_from_json(require(c, "center", "circle curve"), "center");
        const double radius = number_from_json(require(c, "radius", "circle curve"));
        const int samples = c.contains("samples") ? c.at("samples").get<int>() : 64;
        return circle_curve(center, radius, samples);
    }
    if (kind == "polygon") {
        std::vector<cplx> v;
        for (const auto& p : require(c, "vertices", "polygon curve")) v.push_back(complex_from_json(p, "vertex"));
        return PolyCurve(std::move(v));
    }
    if (kind == "image") {
        const auto of = require(c, "of", "image curve").get<std::string>();
        PolyCurve src = s.curve(of).curve;
        const int refine = c.contains("refine") ? c.at("refine").get<int>() : 0;
        for (int i = 0; i < refine; ++i) src = src.refined();
        std::vector<cplx> v;
        for (const auto& z : src.vertices()) {
            const ComplexVal w = s.map(ComplexVal(z));
            if (w.is_inf()) throw Error(ErrorCode::Validation, "image of curve '" + of + "' passes through infinity");
            v.push_back(w.value());
        }
        return PolyCurve(std::move(v));
    }
    throw Error(ErrorCode::Validation, "unknown curve kind '" + kind + "'");
}

}  // namespace

json point_json(const ComplexVal& z) {
    if (z.is_inf()) return "inf";
    return format_complex(z);
}

ComplexVal point_from_json(const json& j) {
    if (j.is_string()) return parse_complex(j.get<std::string>());
    if (j.is_number()) return ComplexVal(cplx(j.get<double>(), 0.0));
    if (j.is_array() && j.size() == 2) return ComplexVal(cplx(number_from_json(j[0]), number_from_json(j[1])));
    throw Error(ErrorCode::Parse, "expected a point as \"re,im\", a number, or [re, im]; got " + j.dump());
}

double number_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto z = parse_complex(j.get<std::string>());
        if (z.is_inf() || z.value().imag() != 0.0) throw Error(ErrorCode::Parse, "expected a real number, got " + j.dump());
        return z.value().real();
    }
    throw Error(ErrorCode::Parse, "expected a number, got " + j.dump());
}

void check_reduced(const QuadMap<cplx>& f, const MarkedSet& A, const MarkedSet& B, double rel_tol) {
    std::vector<std::pair<std::string, ComplexVal>> required;
    for (const auto& p : A.points()) {
        required.emplace_back(p.label, p.pos);
        required.emplace_back("f(" + p.label + ")", f(p.pos));
    }
    required.emplace_back("critical value inf", ComplexVal::infinity());
    required.emplace_back("critical value v", f.critical_value());
    for (const auto& [what, z] : required) {
        if (!find_position(B.points(), z, rel_tol))
            throw Error(ErrorCode::NotReduced, "B misses " + what + " = " + format_complex(z));
    }
    for (const auto& p : B.points()) {
        const bool needed = std::any_of(required.begin(), required.end(),
                                        [&](const auto& r) { return same_position(r.second, p.pos, rel_tol); });
        if (!needed) throw Error(ErrorCode::NotReduced, "B point '" + p.label + "' is not in A u f(A) u V(f)");
    }
}

const ScenarioCurve& Scenario::curve(const std::string& label) const {
    for (const auto& c : curves) {
        if (c.label == label) return c;
    }
    throw Error(ErrorCode::Validation, "no curve labelled '" + label + "'");
}

CurveClass Scenario::class_rel_B(const std::string& label) const { return curve_word(curve(label).curve, B, clearance_rel); }

std::vector<std::string> Scenario::resolve_multicurve_name(const std::string& name_or_labels) const {
    if (auto it = multicurves.find(name_or_labels); it != multicurves.end()) return it->second;
    std::vector<std::string> out;
    std::stringstream ss(name_or_labels);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

Multicurve Scenario::multicurve(const std::vector<std::string>& labels) const {
    std::vector<LabelledCurve> lc;
    for (const auto& l : labels) lc.push_back({l, curve(l).curve, class_rel_B(l)});
    return Multicurve(std::move(lc));
}

Scenario parse_scenario(const json& j, const ScenarioOptions& opts) {
    if (!j.is_object()) throw Error(ErrorCode::Parse, "scenario must be a JSON object");
    Scenario s;
    s.clearance_rel = opts.clearance_rel;
    s.name = j.value("name", "");
    resolve_map(s, require(j, "map", "scenario"));
    resolve_marked_sets(s, j.contains("marked_sets") ? j.at("marked_sets") : json::object());

    std::set<std::string> labels;
    const json curves = j.value("curves", json::array());
    for (const auto& c : curves) {
        ScenarioCurve sc;
        sc.label = require(c, "label", "curve").get<std::string>();
        if (!labels.insert(sc.label).second) throw Error(ErrorCode::Validation, "duplicate curve label '" + sc.label + "'");
        try {
            sc.curve = validate(curve_from_json(s, c, sc.source_kind), s.B, s.clearance_rel);
        } catch (const Error& e) {
            throw Error(e.code(), "curve '" + sc.label + "': " + e.what());
        }
        s.curves.push_back(std::move(sc));
    }
    const json mc = j.value("multicurves", json::object());
    for (const auto& [name, list] : mc.items()) {
        std::vector<std::string> members;
        for (const auto& l : list) {
            const auto label = l.get<std::string>();
            if (!labels.count(label)) throw Error(ErrorCode::Validation, "multicurve '" + name + "' names unknown curve '" + label + "'");
            members.push_back(label);
        }
        s.multicurves[name] = std::move(members);
    }
    return s;
}

Scenario load_scenario(const std::string& path, const ScenarioOptions& opts) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open scenario '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Parse, "scenario '" + path + "': " + e.what());
    }
    return parse_scenario(j, opts);
}

json serialize_scenario(const Scenario& s) {
    json map = {{"kind", "explicit"}};
    if (s.exact_map) {
        map["b"] = s.exact_map->b().str();
        map["c"] = s.exact_map->c().str();
    } else {
        map["b"] = point_json(ComplexVal(s.map.b()));
        map["c"] = point_json(ComplexVal(s.map.c()));
    }
    if (s.period) map["period"] = *s.period;

    auto points = [](const MarkedSet& m) {
        json arr = json::array();
        for (const auto& p : m.points()) arr.push_back({{"label", p.label}, {"pos", point_json(p.pos)}});
        return arr;
    };
    json curves = json::array();
    for (const auto& c : s.curves) {
        json verts = json::array();
        for (const auto& z : c.curve.vertices()) verts.push_back({format_double(z.real()), format_double(z.imag())});
        curves.push_back({{"label", c.label}, {"kind", "polygon"}, {"vertices", verts}});
    }
    json out = {{"name", s.name},
                {"map", map},
                {"marked_sets", {{"A", points(s.A)}, {"B", points(s.B)}}},
                {"curves", curves},
                {"multicurves", s.multicurves}};
    return out;
}

}  // namespace pernloci
