// One PASS/FAIL line per acceptance criterion. Usage: acceptance <cli-binary> <scenario-dir>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "../tests/oracles.hpp"
#include "pernloci/report.hpp"
#include "pernloci/svg.hpp"

using namespace pernloci;

namespace {

std::string g_cli, g_scenarios;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_s(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-200, 200), den(1, 97);
    return Rational(num(rng)) / Rational(den(rng));
}

std::string scenario(const char* name) { return g_scenarios + "/" + name; }

// ---------------------------------------------------------------- 1
Outcome polynomial_identities() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto all = build_pern_upto(12);
    const auto b = BivarPoly::var_b(), c = BivarPoly::var_c();
    auto at = [&](int k) -> const PernPolys& { return all[static_cast<std::size_t>(k - 2)]; };
    for (int k = 2; k <= 12; ++k) {
        const int dp = at(k).P.degree(), dq = at(k).Q.degree();
        o.require(dp == dq + (k % 2), "degree parity at k=" + std::to_string(k) + " (deg P=" + std::to_string(dp) +
                                         ", deg Q=" + std::to_string(dq) + ")");
        o.require(homogeneous_coprime(at(k).p_red, at(k).q_red), "p_red, q_red coprime at k=" + std::to_string(k));
    }
    for (int n : {5, 7, 9, 11}) {
        const auto& pm = at(n - 2);
        o.require(at(n).p_red == pm.p_red * (b * b * pm.q_red + (b + c) * pm.p_red),
                  "odd factorization at n=" + std::to_string(n));
    }
    std::vector<std::string> broken;
    for (int k = 3; k <= 6; ++k) {
        for (int m = 2; k * m <= 12; ++m) {
            const UniPoly pk = at(k).p_red.dehomogenize(), pkm = at(k * m).p_red.dehomogenize();
            if (!divides(pk, pkm)) {
                const bool unreduced = divides(pk, at(k * m).p.dehomogenize());
                broken.push_back("(" + std::to_string(k) + "," + std::to_string(k * m) + ")" +
                                 (unreduced ? " [holds for the unreduced top part]" : ""));
            }
        }
    }
    if (!broken.empty()) {
        std::string s;
        for (const auto& x : broken) s += (s.empty() ? "" : ", ") + x;
        o.require(false, "root inheritance p_red_k | p_red_km for " + s);
    }
    const double dt = seconds_since(t0);
    o.require(dt < 10.0, "time budget (" + fmt_s(dt) + ")");
    o.note("deg P_12 = " + std::to_string(at(12).P.degree()) + ", " + fmt_s(dt));
    return o;
}

// ---------------------------------------------------------------- 2
Outcome per4_closed_forms() {
    Outcome o;
    std::mt19937_64 rng(2024);
    const BivarPoly P4 = build_pern(4).P;
    int done = 0;
    while (done < 100) {
        const Rational rho = random_rational(rng);
        if (rho.is_zero() || rho == Rational(1) || rho == Rational(1) / Rational(2)) continue;
        const auto pt = per4_from_rho(rho);
        const auto orb = orbit(pt.map(), Extended<Rational>(Rational(0)), 4);
        const bool closes = orb[1].is_inf() && orb[2] == Extended<Rational>(Rational(1)) &&
                            orb[3] == Extended<Rational>(rho) && orb[4] == orb[0];
        o.require(closes, "orbit 0 -> inf -> 1 -> rho -> 0 at rho=" + rho.str());
        o.require(pt.v == pt.v_expanded, "v forms agree at rho=" + rho.str());
        o.require(P4.eval(pt.b, pt.c).is_zero(), "P_4(b, c) = 0 at rho=" + rho.str());
        ++done;
    }
    const auto two = per4_from_rho(Rational(2));
    o.require(two.b == Rational(-5) && two.c == Rational(6), "rho=2 gives (b, c) = (-5, 6)");
    o.require(two.v == Extended<Rational>(Rational(-1) / Rational(24)), "rho=2 gives v = -1/24");
    o.note("100 random rho");
    return o;
}

// ---------------------------------------------------------------- 3
Outcome per3_two_to_one() {
    Outcome o;
    const Rational v = Rational(4) / Rational(3);
    const auto fib = per3_fiber_exact(v);
    o.require(fib.has_value(), "fiber over 4/3 is rational");
    if (!fib) return o;
    std::set<std::string> bs;
    std::vector<std::vector<ComplexVal>> configs;
    for (const auto& f : fib->maps) {
        bs.insert(f.b().str());
        o.require(f.critical_value() == Extended<Rational>(v), "second critical value 4/3 for b=" + f.b().str());
        const auto chk = check_pern_prime(f, 3);
        o.require(chk.in_pern_prime(), "map in Per'_3 for b=" + f.b().str());
        configs.push_back({chk.orbit[0], chk.orbit[1], chk.orbit[2], chk.v});
    }
    o.require(bs == std::set<std::string>{"2", "-2/3"}, "b in {2, -2/3}");
    bool same = configs.size() == 2;
    for (std::size_t i = 0; same && i < 4; ++i) same = configs[0][i] == configs[1][i];
    o.require(same, "both maps project to the marked configuration (0, inf, 1, 4/3)");
    return o;
}

// ---------------------------------------------------------------- 4
Outcome projectability() {
    Outcome o;
    std::mt19937_64 rng(77);
    int done = 0, skipped = 0;
    while (done < 100) {
        const Rational rho = random_rational(rng), s = random_rational(rng);
        if (rho == Rational(1)) continue;
        std::pair<Rational, Rational> bc;
        try {
            bc = params_from_rho_s(rho, s);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Degenerate) o.require(false, std::string("unexpected ") + e.what());
            ++skipped;
            continue;
        }
        const QuadMap<Rational> f(bc.first, bc.second);
        const auto f1 = f(Extended<Rational>(Rational(1)));
        o.require(f1 == Extended<Rational>(rho) && f(f1) == Extended<Rational>(s),
                  "(f(1), f(f(1))) = (rho, s) at rho=" + rho.str() + ", s=" + s.str());
        ++done;
    }
    bool singular = false;
    try {
        params_from_rho_s(Rational(1), Rational(5));
    } catch (const Error& e) {
        singular = e.code() == ErrorCode::Singular;
    }
    o.require(singular, "rho = 1 raises SINGULAR");
    o.note("100 pairs, " + std::to_string(skipped) + " degenerate draws skipped");
    return o;
}

// ---------------------------------------------------------------- 5
Outcome lemma52() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const Scenario s = load_scenario(scenario("lemma52_rho100.json"));
    const auto g1 = s.curve("gamma1");
    o.require(std::abs(g1.curve.vertices()[0] - cplx(10.0, 0.0)) == 0.0, "gamma1 = circle(0, sqrt(rho))");
    const auto cg = s.class_rel_B("gamma"), cg1 = s.class_rel_B("gamma1");
    o.require(class_equal(cg, cg1), "[f(gamma1)]_B = [gamma1]_B");
    const auto data = thurston_matrices(s.map, s.multicurve({"gamma"}), s.A, s.B);
    const auto& comps = data.preimages[0].components;
    o.require(!data.preimages[0].swap && comps.size() == 2, "two degree-1 preimage components");
    if (comps.size() == 2) {
        o.require(comps[0].essential() && class_equal(comps[0].cls, forget(cg, s.A)), "first component is [gamma]_A");
        o.require(comps[1].cls.is_trivial(), "second component trivial rel A");
    }
    o.require(data.T.rows() == 1 && data.T(0, 0) == Rational(1), "T = [1]");
    o.require(data.I.rows() == 1 && data.I(0, 0) == Rational(1), "I = [1]");
    const auto out = equalizing_solve(data);
    o.require(out.certificate && out.certificate->verified && out.certificate->m == std::vector<Rational>{Rational(1)},
              "equalizing certificate m = (1)");
    if (out.certificate) {
        const auto tw = twist_certificate(*out.certificate, data.component_degrees);
        o.note("twist " + tw.str() + ", kind " + out.certificate->kind);
    }
    const double dt = seconds_since(t0);
    o.require(dt < 30.0, "time budget (" + fmt_s(dt) + ")");
    return o;
}

// ---------------------------------------------------------------- 6
Outcome lemma61() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (int n : {5, 6}) {
        const auto dirs = asymptotic_directions(n);
        std::size_t idx = dirs.size();
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            if (!dirs[i].inherited()) {
                idx = i;
                break;
            }
        }
        o.require(idx < dirs.size(), "non-inherited direction for n=" + std::to_string(n));
        if (idx == dirs.size()) continue;
        const json spec = {{"name", "n=" + std::to_string(n)},
                           {"map", {{"kind", "pern_solve"}, {"n", n}, {"alpha_index", idx}, {"c", "10000"}}},
                           {"curves",
                            {{{"label", "gamma1"}, {"kind", "circle"}, {"center", "0"}, {"radius", 100}, {"samples", 256}},
                             {{"label", "gamma"}, {"kind", "image"}, {"of", "gamma1"}}}}};
        Scenario s;
        try {
            s = parse_scenario(spec);
        } catch (const Error& e) {
            o.require(false, "n=" + std::to_string(n) + ": " + e.what());
            continue;
        }
        o.require(s.period == n, "solved map has exact period " + std::to_string(n));
        // Expected split: 0, 1 and even-indexed orbit points against v, inf and odd-indexed ones.
        std::vector<std::string> in = {"0", "1"}, out = {"inf", "v"};
        for (int k = 3; k < n; ++k) (k % 2 == 0 ? in : out).push_back("rho" + std::to_string(k));
        const auto cls = s.class_rel_B("gamma");
        o.require(oracle::sorted(cls.inside()) == oracle::sorted(in) && oracle::sorted(cls.outside()) == oracle::sorted(out),
                  "partition for n=" + std::to_string(n));
        o.require(oracle::enclosed_labels(s.curve("gamma").curve.vertices(), s.B) == oracle::sorted(in),
                  "ray-casting partition for n=" + std::to_string(n));
        const auto data = thurston_matrices(s.map, s.multicurve({"gamma"}), s.A, s.B);
        const auto res = equalizing_solve(data);
        o.require(res.certificate && res.certificate->verified, "equalizing certificate for n=" + std::to_string(n));
        std::string inside;
        for (const auto& l : oracle::sorted(in)) inside += (inside.empty() ? "" : ",") + l;
        o.note("n=" + std::to_string(n) + " alpha#" + std::to_string(idx) + " inside {" + inside + "}" +
               (res.certificate ? ", " + res.certificate->kind : ""));
    }
    const double dt = seconds_since(t0);
    o.require(dt < 120.0, "time budget (" + fmt_s(dt) + ")");
    return o;
}

// ---------------------------------------------------------------- 7
Outcome figure1_lemma53() {
    Outcome o;
    const Scenario f1 = load_scenario(scenario("fig1_delta0v.json"));
    const auto d1 = thurston_matrices(f1.map, f1.multicurve({"delta_0v"}), f1.A, f1.B);
    o.require(d1.delta_classes.empty(), "delta around {0, v}: empty Delta");
    const auto r1 = equalizing_solve(d1);
    o.require(r1.certificate && r1.certificate->verified, "delta around {0, v}: certificate");

    const Scenario s = load_scenario(scenario("lemma52_rho100.json"));
    const auto cd = s.class_rel_B("delta_rhov");
    o.require(cd.is_essential(), "delta around {rho, v} essential rel B");
    const auto fd = forget(cd, s.A);
    o.require(fd.is_peripheral(), "forget(delta) peripheral");
    const auto pre = trace_preimage(s.map, s.curve("delta_rhov").curve, s.A, s.B);
    o.require(pre.components.size() == 1 && pre.components[0].cls.is_peripheral(),
              "single preimage component peripheral rel A");
    o.require(disjoint(s.curve("gamma").curve, s.curve("delta_rhov").curve), "disjoint(gamma, delta)");
    if (pre.components.size() == 1)
        o.note("preimage degree " + std::to_string(pre.components[0].degree) + ", peripheral about " +
               pre.components[0].cls.peripheral_label());
    return o;
}

// ---------------------------------------------------------------- 8
Outcome punctures() {
    Outcome o;
    const auto rep = per4_puncture_analysis();
    auto find = [&](const std::string& name) -> const PunctureReport* {
        for (const auto& r : rep)
            if (r.puncture == name) return &r;
        return nullptr;
    };
    auto has_cluster = [](const PunctureReport& r, std::vector<std::string> want) {
        std::sort(want.begin(), want.end());
        return std::any_of(r.clusters.begin(), r.clusters.end(), [&](auto c) {
            std::sort(c.begin(), c.end());
            return c == want;
        });
    };
    const auto* r0 = find("rho=0");
    o.require(r0 && has_cluster(*r0, {"rho", "0"}) && has_cluster(*r0, {"v", "inf"}), "rho -> 0: {rho,0} + {v,inf}");
    const auto* ri = find("rho=inf");
    o.require(ri && has_cluster(*ri, {"v", "rho", "inf"}), "rho -> inf: {v,rho,inf}");
    o.require(ri && ri->asymptotics.find("-1/8") != std::string::npos, "v ~ -rho/8");
    if (ri) o.note(ri->asymptotics);
    return o;
}

// ---------------------------------------------------------------- 9
std::vector<PolyCurve> corpus() {
    std::vector<PolyCurve> c;
    c.push_back(circle_curve(cplx(0), 0.5, 32));
    c.push_back(circle_curve(cplx(1), 0.5, 32));
    c.push_back(circle_curve(cplx(100), 5, 32));
    c.push_back(circle_curve(cplx(-11.94, 0), 1.0, 32));  // around v
    c.push_back(circle_curve(cplx(0.5, 0), 2.0, 48));     // {0, 1}
    c.push_back(circle_curve(cplx(0), 10.0, 64));         // {0, 1}
    c.push_back(circle_curve(cplx(-6, 0), 7.5, 64));      // {v, 0, 1}
    c.push_back(circle_curve(cplx(50, 0), 60.0, 128));    // every finite point
    c.push_back(circle_curve(cplx(-6, 2), 6.5, 40));      // {v, 0}
    c.push_back(circle_curve(cplx(30, 30), 5.0, 24));     // trivial
    c.push_back(PolyCurve({cplx(-14, -1), cplx(0.5, -1), cplx(0.5, 1), cplx(-14, 1)}));
    c.push_back(PolyCurve({cplx(-16, -20), cplx(105, -20), cplx(105, 5), cplx(95, 5), cplx(95, -15), cplx(-10, -15),
                           cplx(-10, 5), cplx(-16, 5)}));
    c.push_back(PolyCurve({cplx(0.5, -3), cplx(110, -3), cplx(110, 3), cplx(0.5, 3)}));   // {1, rho}
    c.push_back(PolyCurve({cplx(-0.5, -3), cplx(110, -3), cplx(110, 3), cplx(-0.5, 3)})); // {0, 1, rho}
    c.push_back(PolyCurve({cplx(-13, -2), cplx(110, -2), cplx(110, 2), cplx(-13, 2)}));   // all four
    c.push_back(PolyCurve({cplx(-13, -2), cplx(2, -2), cplx(2, 2), cplx(-13, 2)}));       // {v, 0, 1}
    // U-shape around 0 and rho avoiding 1
    c.push_back(PolyCurve({cplx(-1, -4), cplx(104, -4), cplx(104, 4), cplx(96, 4), cplx(96, -2), cplx(0.7, -2),
                           cplx(0.7, 4), cplx(-1, 4)}));
    // U-shape around v and 1 passing below 0
    c.push_back(PolyCurve({cplx(-13, -4), cplx(1.5, -4), cplx(1.5, 4), cplx(0.6, 4), cplx(0.6, -2), cplx(-10, -2),
                           cplx(-10, 4), cplx(-13, 4)}));
    c.push_back(circle_curve(cplx(3.9, 0.0), 0.5, 24));   // near the free critical point, trivial
    c.push_back(circle_curve(cplx(-11.94, 0), 12.5, 96)); // {v, 0}, big
    return c;
}

bool same_components(const PreimageResult& a, const PreimageResult& b) {
    if (a.swap != b.swap || a.components.size() != b.components.size()) return false;
    std::vector<bool> used(b.components.size(), false);
    for (const auto& x : a.components) {
        bool found = false;
        for (std::size_t j = 0; j < b.components.size() && !found; ++j) {
            if (!used[j] && x.degree == b.components[j].degree && class_equal(x.cls, b.components[j].cls)) found = used[j] = true;
        }
        if (!found) return false;
    }
    return true;
}

Outcome property_suites() {
    Outcome o;
    const Scenario s = load_scenario(scenario("lemma52_rho100.json"));
    const cplx v = s.B.at("v").pos.value();
    const auto curves = corpus();
    o.require(curves.size() == 20, "corpus has 20 curves");
    int swaps = 0;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const std::string id = "curve " + std::to_string(i);
        PolyCurve c;
        try {
            c = validate(curves[i], s.B);
        } catch (const Error& e) {
            o.require(false, id + " invalid: " + e.what());
            continue;
        }
        const auto r = trace_preimage(s.map, c, s.A, s.B);
        const bool v_inside = oracle::point_in_polygon(c.vertices(), v);
        swaps += r.swap;
        o.require(r.swap == v_inside, id + ": swap iff the curve separates v from inf");
        const bool shape = r.swap ? (r.components.size() == 1 && r.components[0].degree == 2)
                                  : (r.components.size() == 2 && r.components[0].degree == 1 && r.components[1].degree == 1);
        o.require(shape, id + ": component degrees match the monodromy");
        o.require(composition_error(s.map, r, c) < 1e-9, id + ": f(preimage) lies on the curve");
        const auto r2 = trace_preimage(s.map, validate(c.refined(), s.B), s.A, s.B);
        const auto r3 = trace_preimage(s.map, validate(c.refined().refined(), s.B), s.A, s.B);
        o.require(same_components(r, r2) && same_components(r, r3), id + ": stable under refinement");
        o.require(isotopy_stable(c, s.B, 100, 1000 + i), id + ": word invariant under 100 isotopies");
    }
    o.note("20 curves, " + std::to_string(swaps) + " with swap monodromy");

    // Brute force over all 1x1 and 2x2 systems with entries in {1/2, 3/2, 2}.
    const std::vector<Rational> vals = {Rational(1) / Rational(2), Rational(3) / Rational(2), Rational(2)};
    int systems = 0, positive = 0, disagreements = 0;
    for (std::size_t k : {1u, 2u}) {
        const std::size_t cells = 2 * k * k;
        std::size_t total = 1;
        for (std::size_t i = 0; i < cells; ++i) total *= vals.size();
        for (std::size_t code = 0; code < total; ++code) {
            RationalMatrix T(k, k), I(k, k);
            std::size_t x = code;
            for (std::size_t i = 0; i < k * k; ++i, x /= 3) T(i / k, i % k) = vals[x % 3];
            for (std::size_t i = 0; i < k * k; ++i, x /= 3) I(i / k, i % k) = vals[x % 3];
            std::vector<std::string> labels;
            for (std::size_t j = 0; j < k; ++j) labels.push_back("g" + std::to_string(j));
            const auto out = equalizing_solve(T, I, labels);
            const auto brute = oracle::brute_force_equalizing(T, I, 20);
            ++systems;
            positive += brute.has_value();
            bool agree = out.certificate.has_value() == brute.has_value();
            if (agree && out.certificate) {
                const auto res = (T - I).apply(out.certificate->m);
                agree = std::all_of(res.begin(), res.end(), [](const Rational& r) { return r.is_zero(); });
            }
            disagreements += !agree;
        }
    }
    o.require(disagreements == 0, std::to_string(disagreements) + " solver/brute-force disagreements");
    o.note(std::to_string(systems) + " systems, " + std::to_string(positive) + " equalizable");
    return o;
}

// ---------------------------------------------------------------- 10
int run_cli(const std::string& args) {
    const std::string cmd = "\"" + g_cli + "\" " + args + " >/dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

Outcome cli() {
    Outcome o;
    const auto tmp = std::filesystem::temp_directory_path() / ("pernloci_acc_" + std::to_string(::getpid()));
    std::filesystem::create_directories(tmp);
    int files = 0, svgs = 0;
    for (const auto& e : std::filesystem::directory_iterator(g_scenarios)) {
        if (e.path().extension() != ".json" || e.path().filename() == "missing_v.json") continue;
        const std::string name = e.path().filename().string();
        const Scenario s = load_scenario(e.path().string());
        const json j = serialize_scenario(s);
        const Scenario t = parse_scenario(json::parse(j.dump()));
        bool same = serialize_scenario(t) == j && s.B.same_as(t.B) && s.A.same_as(t.A) && s.map.b() == t.map.b() &&
                    s.map.c() == t.map.c() && s.curves.size() == t.curves.size();
        for (std::size_t i = 0; same && i < s.curves.size(); ++i) same = s.curves[i].curve.vertices() == t.curves[i].curve.vertices();
        o.require(same, "round trip of " + name);
        // Resolved file through the CLI loads again to the same scenario.
        const auto resolved = (tmp / ("resolved_" + name)).string();
        o.require(run_cli("scenario --scenario \"" + e.path().string() + "\" --out \"" + resolved + "\"") == 0,
                  "cli scenario dump of " + name);
        o.require(serialize_scenario(load_scenario(resolved)) == j, "cli round trip of " + name);
        ++files;

        std::vector<std::string> labels;
        for (const auto& c : s.curves) labels.push_back(c.label);
        std::string why;
        o.require(oracle::xml_well_formed(plot_scenario(s, labels), &why), "svg of " + name + " (" + why + ")");
        const auto svg_path = (tmp / (name + ".svg")).string();
        std::string pre;
        for (const auto& l : labels) pre += (pre.empty() ? "" : ",") + l;
        o.require(run_cli("plot --scenario \"" + e.path().string() + "\"" + (pre.empty() ? "" : " --preimages " + pre) +
                          " --out \"" + svg_path + "\"") == 0,
                  "cli plot of " + name);
        std::ifstream in(svg_path);
        std::stringstream ss;
        ss << in.rdbuf();
        o.require(oracle::xml_well_formed(ss.str(), &why), "cli svg of " + name + " (" + why + ")");
        svgs += 2;
    }
    struct Case {
        std::string args;
        int code;
    };
    const std::vector<Case> cases = {
        {"per4 param --rho 2", 0},
        {"per4 param --rho 1/2", 2},
        {"per3 fiber --v 1", 2},
        {"scenario --scenario \"" + scenario("missing_v.json") + "\"", 2},
        {"pern poly --n 25", 2},
        {"pern solve --n 7 --alpha-index 0 --c 1", 3},
        {"pern solve --n 5 --alpha-index 0 --c 10000", 3},
        {"pullback --scenario \"" + scenario("lemma52_rho100.json") + "\" --curve gamma1", 0},
        {"scenario --scenario /nonexistent.json", 1},
        {"per4 param", 1},
        {"no-such-command", 1},
    };
    for (const auto& c : cases) {
        const int got = run_cli(c.args);
        o.require(got == c.code, "`" + c.args + "` exited " + std::to_string(got) + ", expected " + std::to_string(c.code));
    }
    std::filesystem::remove_all(tmp);
    o.note(std::to_string(files) + " scenarios, " + std::to_string(svgs) + " SVGs, " + std::to_string(cases.size()) +
           " exit-code cases");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <pernloci-cli> <scenario-dir>\n";
        return 1;
    }
    g_cli = argv[1];
    g_scenarios = argv[2];
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"polynomial identities", polynomial_identities},
        {"Per_4 closed forms", per4_closed_forms},
        {"Per_3 two-to-one fibers", per3_two_to_one},
        {"projectability round trip", projectability},
        {"rho = 100 equalizing curve", lemma52},
        {"Per_5 and Per_6 equalizing curves", lemma61},
        {"curves around {0, v} and {rho, v}", figure1_lemma53},
        {"Per_4 punctures", punctures},
        {"property suites", property_suites},
        {"CLI round trip, SVG and exit codes", cli},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
        for (const auto& n : o.notes) std::cout << " | " << n;
        std::cout << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
