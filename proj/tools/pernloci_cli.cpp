#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pernloci/report.hpp"
#include "pernloci/svg.hpp"

using namespace pernloci;

namespace {

struct Globals {
    double tol = 1e-6;
    std::uint64_t seed = 0;
    std::string out;
    bool pretty = false;
};

void emit(const Globals& g, const json& j) {
    const std::string text = j.dump(g.pretty ? 2 : -1) + "\n";
    if (g.out.empty())
        std::cout << text;
    else
        write_text_file(g.out, text);
}

int exit_status(ErrorCode code) {
    switch (error_class(code)) {
        case ErrorClass::Validation: return 2;
        case ErrorClass::Numerical: return 3;
        default: return 1;
    }
}

Scenario load(const std::string& path, const Globals& g) {
    ScenarioOptions opts;
    opts.clearance_rel = g.tol;
    return load_scenario(path, opts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Per_n loci, curve pullback and equalizing certificates for quadratic rational maps"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--tol", g.tol, "relative clearance tolerance")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for perturbation tests");
    app.add_option("--out", g.out, "write the report (or SVG) to this path");
    app.add_flag("--pretty", g.pretty, "indent JSON output");

    int n = 0;
    bool reduced = false;
    std::size_t alpha_index = 0;
    std::string c_str = "10000", rho, v, b_str, z0 = "0", scenario_path, curve_label, multicurve;
    int steps = 10, perturb = 0;
    bool subsets = false;
    std::vector<std::string> preimages;

    auto* pern = app.add_subcommand("pern", "Per_n polynomials and asymptotics");
    pern->require_subcommand(1);
    pern->fallthrough();
    auto* pern_poly = pern->add_subcommand("poly", "P_n, Q_n and their top and reduced parts");
    pern_poly->add_option("--n", n)->required();
    pern_poly->add_flag("--reduced", reduced, "only the reduced top parts");
    auto* pern_roots = pern->add_subcommand("roots", "asymptotic directions b/c at infinity");
    pern_roots->add_option("--n", n)->required();
    auto* pern_solve = pern->add_subcommand("solve", "Newton solve for a map in Per_n near a direction");
    pern_solve->add_option("--n", n)->required();
    pern_solve->add_option("--alpha-index", alpha_index)->required();
    pern_solve->add_option("--c", c_str, "value of c, \"re\" or \"re,im\"")->capture_default_str();

    auto* per4 = app.add_subcommand("per4", "the Per_4 parametrization");
    per4->require_subcommand(1);
    per4->fallthrough();
    auto* per4_param = per4->add_subcommand("param", "map and critical orbit for a given rho");
    per4_param->add_option("--rho", rho)->required();
    auto* per4_punct = per4->add_subcommand("punctures", "collisions of marked points at the punctures");

    auto* per3 = app.add_subcommand("per3", "the Per_3 fibers");
    per3->require_subcommand(1);
    per3->fallthrough();
    auto* per3_fiber_cmd = per3->add_subcommand("fiber", "maps in Per_3 with a given second critical value");
    per3_fiber_cmd->add_option("--v", v)->required();

    auto* orbit_cmd = app.add_subcommand("orbit", "orbit of a point, one per line");
    orbit_cmd->add_option("--b", b_str)->required();
    orbit_cmd->add_option("--c", c_str)->required();
    orbit_cmd->add_option("--z0", z0)->capture_default_str();
    orbit_cmd->add_option("--steps", steps)->capture_default_str();

    auto* pullback = app.add_subcommand("pullback", "trace the preimage of a scenario curve");
    pullback->add_option("--scenario", scenario_path)->required();
    pullback->add_option("--curve", curve_label)->required();
    pullback->add_option("--perturb", perturb, "random sub-clearance isotopies to check");

    auto* equalize = app.add_subcommand("equalize", "Thurston matrices and equalizing weights");
    auto* twists = app.add_subcommand("certify-twists", "equalizing certificate with the liftable twist word");
    for (auto* sub : {equalize, twists}) {
        sub->add_option("--scenario", scenario_path)->required();
        sub->add_option("--multicurve", multicurve, "named multicurve or comma separated labels")->required();
        sub->add_flag("--subsets", subsets, "retry on sub-multicurves");
    }

    auto* plot = app.add_subcommand("plot", "SVG of marked points, curves and preimages");
    plot->add_option("--scenario", scenario_path)->required();
    plot->add_option("--preimages", preimages, "curve labels whose preimages are drawn")->delimiter(',');

    auto* scen = app.add_subcommand("scenario", "resolved scenario as JSON");
    scen->add_option("--scenario", scenario_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*pern_poly)
            emit(g, report_pern_poly(n, reduced, [](const std::string& w) { std::cerr << "warning: " << w << "\n"; }));
        else if (*pern_roots)
            emit(g, report_pern_roots(n));
        else if (*pern_solve) {
            const auto c = parse_complex(c_str);
            if (c.is_inf()) throw Error(ErrorCode::Validation, "c must be finite");
            emit(g, report_pern_solve(n, alpha_index, c.value()));
        } else if (*per4_param)
            emit(g, report_per4_param(rho, g.tol));
        else if (*per4_punct)
            emit(g, report_per4_punctures());
        else if (*per3_fiber_cmd)
            emit(g, report_per3_fiber(v));
        else if (*orbit_cmd) {
            std::string text;
            for (const auto& line : orbit_lines(b_str, c_str, z0, steps)) text += line + "\n";
            if (g.out.empty())
                std::cout << text;
            else
                write_text_file(g.out, text);
        } else if (*pullback)
            emit(g, report_pullback(load(scenario_path, g), {curve_label, perturb, g.seed}));
        else if (*equalize || *twists) {
            const Scenario s = load(scenario_path, g);
            emit(g, report_equalize(s, s.resolve_multicurve_name(multicurve), subsets, static_cast<bool>(*twists)));
        } else if (*plot) {
            const std::string svg = plot_scenario(load(scenario_path, g), preimages);
            if (g.out.empty())
                std::cout << svg;
            else
                write_text_file(g.out, svg);
        } else if (*scen)
            emit(g, serialize_scenario(load(scenario_path, g)));
    } catch (const Error& e) {
        std::cerr << error_json(e).dump() << "\n";
        return exit_status(e.code());
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "INTERNAL"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
