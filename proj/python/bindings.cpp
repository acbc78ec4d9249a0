#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pernloci/report.hpp"

namespace py = pybind11;
using namespace pernloci;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object& error_type() {
    static py::object t;
    return t;
}

}  // namespace

PYBIND11_MODULE(_pernloci, m) {
    m.doc() = "Per_n loci, curve pullback and equalizing certificates";

    error_type() = py::reinterpret_borrow<py::object>(PyErr_NewException("pernloci.PernlociError", PyExc_RuntimeError, nullptr));
    m.attr("PernlociError") = error_type();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = error_type()(e.what());
            inst.attr("code") = std::string(error_name(e.code()));
            PyErr_SetObject(error_type().ptr(), inst.ptr());
        }
    });

    m.def("pern_poly", [](int n, bool reduced) { return to_py(report_pern_poly(n, reduced)); }, py::arg("n"),
          py::arg("reduced") = false);
    m.def("pern_roots", [](int n) { return to_py(report_pern_roots(n)); }, py::arg("n"));
    m.def("pern_solve", [](int n, std::size_t alpha_index, cplx c) { return to_py(report_pern_solve(n, alpha_index, c)); },
          py::arg("n"), py::arg("alpha_index"), py::arg("c") = cplx(1e4, 0.0));
    m.def("per4_param", [](const std::string& rho, double tol) { return to_py(report_per4_param(rho, tol)); }, py::arg("rho"),
          py::arg("tol") = 1e-9, "rho as \"p/q\" for exact arithmetic or \"re,im\"");
    m.def("per4_punctures", [] { return to_py(report_per4_punctures()); });
    m.def("per3_fiber", [](const std::string& v) { return to_py(report_per3_fiber(v)); }, py::arg("v"));
    m.def("params_from_rho_s", [](const std::string& rho, const std::string& s) { return to_py(report_params_from_rho_s(rho, s)); },
          py::arg("rho"), py::arg("s"));
    m.def("orbit", &orbit_lines, py::arg("b"), py::arg("c"), py::arg("z0") = "0", py::arg("steps") = 10);

    py::class_<Scenario>(m, "Scenario")
        .def_readonly("name", &Scenario::name)
        .def_property_readonly("curve_labels",
                               [](const Scenario& s) {
                                   std::vector<std::string> out;
                                   for (const auto& c : s.curves) out.push_back(c.label);
                                   return out;
                               })
        .def_property_readonly("marked_labels", [](const Scenario& s) { return s.B.labels(); })
        .def_property_readonly("map", [](const Scenario& s) { return std::make_pair(s.map.b(), s.map.c()); })
        .def("serialize", [](const Scenario& s) { return to_py(serialize_scenario(s)); })
        .def("class_rel_B", [](const Scenario& s, const std::string& l) { return to_py(class_json(s.class_rel_B(l))); })
        .def(
            "pullback",
            [](const Scenario& s, const std::string& label, int perturb, std::uint64_t seed) {
                return to_py(report_pullback(s, {label, perturb, seed}));
            },
            py::arg("label"), py::arg("perturb") = 0, py::arg("seed") = 0)
        .def(
            "equalize",
            [](const Scenario& s, const std::string& multicurve, bool subsets, bool twists) {
                return to_py(report_equalize(s, s.resolve_multicurve_name(multicurve), subsets, twists));
            },
            py::arg("multicurve"), py::arg("subsets") = false, py::arg("twists") = false)
        .def("plot", &plot_scenario, py::arg("preimages") = std::vector<std::string>{});

    m.def(
        "load_scenario",
        [](const std::string& path, double tol) {
            ScenarioOptions o;
            o.clearance_rel = tol;
            return load_scenario(path, o);
        },
        py::arg("path"), py::arg("tol") = kDefaultClearance);
    m.def(
        "parse_scenario",
        [](const std::string& text, double tol) {
            ScenarioOptions o;
            o.clearance_rel = tol;
            try {
                return parse_scenario(json::parse(text), o);
            } catch (const json::parse_error& e) {
                throw Error(ErrorCode::Parse, e.what());
            }
        },
        py::arg("text"), py::arg("tol") = kDefaultClearance);
}
