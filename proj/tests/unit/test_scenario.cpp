#include <filesystem>

#include "../oracles.hpp"
#include "doctest.h"
#include "pernloci/report.hpp"
#include "pernloci/svg.hpp"

using namespace pernloci;

#ifndef PERNLOCI_SCENARIO_DIR
#define PERNLOCI_SCENARIO_DIR "scenarios"
#endif

namespace {

std::string path(const char* name) { return std::string(PERNLOCI_SCENARIO_DIR) + "/" + name; }

void check_same(const Scenario& a, const Scenario& b) {
    CHECK(a.map.b() == b.map.b());
    CHECK(a.map.c() == b.map.c());
    CHECK(a.exact_map.has_value() == b.exact_map.has_value());
    if (a.exact_map) {
        CHECK(a.exact_map->b() == b.exact_map->b());
        CHECK(a.exact_map->c() == b.exact_map->c());
    }
    CHECK(a.B.same_as(b.B));
    CHECK(a.A.same_as(b.A));
    REQUIRE(a.curves.size() == b.curves.size());
    for (std::size_t i = 0; i < a.curves.size(); ++i) {
        CHECK(a.curves[i].label == b.curves[i].label);
        CHECK(a.curves[i].curve.vertices() == b.curves[i].curve.vertices());
    }
    CHECK(a.multicurves == b.multicurves);
}

}  // namespace

TEST_CASE("bundled scenarios round-trip losslessly") {
    for (const auto& e : std::filesystem::directory_iterator(PERNLOCI_SCENARIO_DIR)) {
        if (e.path().extension() != ".json" || e.path().filename() == "missing_v.json") continue;
        CAPTURE(e.path().string());
        const Scenario s = load_scenario(e.path().string());
        const json j = serialize_scenario(s);
        const Scenario t = parse_scenario(json::parse(j.dump()));
        check_same(s, t);
        CHECK(serialize_scenario(t) == j);
    }
}

TEST_CASE("scenario errors") {
    try {
        load_scenario(path("missing_v.json"));
        FAIL("expected NOT_REDUCED");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotReduced);
    }
    CHECK_THROWS_AS(load_scenario(path("does_not_exist.json")), Error);
    CHECK_THROWS_AS(parse_scenario(json::parse(R"({"map": {"kind": "nope"}})")), Error);
    const auto bad_curve = json::parse(R"({"map": {"kind": "per4_rho", "rho": "100"},
        "curves": [{"label": "x", "kind": "circle", "center": "0", "radius": 1}]})");
    try {
        parse_scenario(bad_curve);
        FAIL("expected CLEARANCE");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Clearance);
    }
}

TEST_CASE("auto marked sets") {
    const Scenario s = load_scenario(path("lemma52_rho100.json"));
    CHECK(s.A.labels() == std::vector<std::string>{"0", "inf", "1", "rho"});
    CHECK(s.B.labels() == std::vector<std::string>{"0", "inf", "1", "rho", "v"});
    CHECK(s.exact_map->b() == Rational(-10099) / Rational(99));
    const Scenario e = load_scenario(path("explicit_b-5_c6.json"));
    REQUIRE(e.exact_map);
    CHECK(e.exact_map->b() == Rational(-5));
}

TEST_CASE("svg output is well formed") {
    const Scenario s = load_scenario(path("lemma52_rho100.json"));
    std::string why;
    const auto svg = plot_scenario(s, {"gamma1", "delta_rhov"});
    CHECK_MESSAGE(oracle::xml_well_formed(svg, &why), why);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    const auto empty = render_svg(s.B, {}, "a < b & c");
    CHECK_MESSAGE(oracle::xml_well_formed(empty, &why), why);
    CHECK_FALSE(oracle::xml_well_formed("<svg><g></svg>"));
    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/x.svg", svg), Error);
}

TEST_CASE("isotopy stability") {
    const Scenario s = load_scenario(path("lemma52_rho100.json"));
    CHECK(isotopy_stable(s.curve("delta_rhov").curve, s.B, 30, 1));
}
