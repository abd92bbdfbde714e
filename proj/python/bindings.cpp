#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scalecomplex/classify.hpp"
#include "scalecomplex/collapse.hpp"
#include "scalecomplex/complex.hpp"
#include "scalecomplex/errors.hpp"
#include "scalecomplex/homology.hpp"
#include "scalecomplex/json_io.hpp"
#include "scalecomplex/spheres.hpp"
#include "scalecomplex/verification.hpp"

namespace py = pybind11;

namespace {

// Scales cross the boundary as sorted lists of pitch indices.
scx::Scale to_scale(const std::vector<int>& members) { return scx::Scale::from_members(members); }

std::vector<std::vector<int>> to_lists(const std::vector<scx::Scale>& scales)
{
    std::vector<std::vector<int>> out;
    out.reserve(scales.size());
    for (scx::Scale s : scales)
        out.push_back(s.members());
    return out;
}

py::object json_to_python(const scx::json::Json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Simplicial complex of non-chromatic scales: faces, facets, homology and collapses.";

    py::register_exception<scx::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<scx::CapacityError>(m, "CapacityError", PyExc_OverflowError);
    py::register_exception<scx::StateError>(m, "StateError", PyExc_RuntimeError);
    py::register_exception<scx::InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);
    py::register_exception<scx::ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<scx::PitchUniverse>(m, "PitchUniverse")
        .def(py::init<>())
        .def(py::init<int, int>(), py::arg("n_pitches"), py::arg("run_limit"))
        .def_property_readonly("n_pitches", &scx::PitchUniverse::n_pitches)
        .def_property_readonly("run_limit", &scx::PitchUniverse::run_limit)
        .def("__repr__", [](const scx::PitchUniverse& u) {
            return "PitchUniverse(" + std::to_string(u.n_pitches()) + ", " + std::to_string(u.run_limit()) + ")";
        });

    py::class_<scx::SimplicialComplex>(m, "SimplicialComplex")
        .def_property_readonly("ground_set_size", &scx::SimplicialComplex::ground_set_size)
        .def_property_readonly("max_dimension", &scx::SimplicialComplex::max_dimension)
        .def("__len__", &scx::SimplicialComplex::face_count)
        .def("__contains__", [](const scx::SimplicialComplex& k, const std::vector<int>& s) { return k.contains(to_scale(s)); })
        .def("facets", [](const scx::SimplicialComplex& k) { return to_lists(k.facets()); })
        .def("faces_of_dim", [](const scx::SimplicialComplex& k, int d) { return to_lists(k.faces_of_dim(d)); })
        .def("f_vector", [](const scx::SimplicialComplex& k) { return scx::f_vector(k).counts; })
        .def("is_pure", [](const scx::SimplicialComplex& k) { return scx::is_pure(k); })
        .def("to_json", [](const scx::SimplicialComplex& k) { return json_to_python(scx::json::complex_to_json(k)); });

    m.def("build_non_chromatic_complex", &scx::build_non_chromatic_complex, py::arg("universe") = scx::PitchUniverse{},
          py::arg("max_pitches") = scx::kDefaultMaxPitches);
    m.def("build_from_facets", [](int n, const std::vector<std::vector<int>>& facets) {
        std::vector<scx::Scale> fs;
        for (const auto& f : facets)
            fs.push_back(to_scale(f));
        return scx::build_from_facets(n, fs);
    }, py::arg("ground_set_size"), py::arg("facets"));
    m.def("complex_from_json", [](const std::string& text) { return scx::json::complex_from_string(text); });

    m.def("interval_sequence", [](const std::vector<int>& s, const scx::PitchUniverse& u) {
        return scx::interval_sequence(to_scale(s), u).intervals();
    }, py::arg("scale"), py::arg("universe") = scx::PitchUniverse{});
    m.def("is_non_chromatic", [](const std::vector<int>& s, const scx::PitchUniverse& u) {
        return scx::is_non_chromatic(to_scale(s), u);
    }, py::arg("scale"), py::arg("universe") = scx::PitchUniverse{});
    m.def("mode_count", [](const std::vector<int>& s, const scx::PitchUniverse& u) {
        return scx::mode_count(to_scale(s), u);
    }, py::arg("scale"), py::arg("universe") = scx::PitchUniverse{});
    m.def("parse_scale", [](const std::string& text, const scx::PitchUniverse& u) {
        return scx::parse_scale(text, u).members();
    }, py::arg("text"), py::arg("universe") = scx::PitchUniverse{});

    m.def("reduced_betti", [](const scx::SimplicialComplex& k) { return scx::reduced_betti(k).values; },
          "Reduced Betti numbers for dimensions -1, 0, 1, ...");
    m.def("connected_components", &scx::connected_components);

    m.def("classify_facets", [](const scx::SimplicialComplex& k, const scx::PitchUniverse& u) {
        return json_to_python(scx::json::classes_to_json(scx::classify_facets(k, u)));
    }, py::arg("complex"), py::arg("universe") = scx::PitchUniverse{});
    m.def("enumerate_maximal_sequences", [](const scx::PitchUniverse& u) {
        std::vector<std::string> out;
        for (const auto& s : scx::enumerate_maximal_sequences(u))
            out.push_back(s.to_string());
        return out;
    }, py::arg("universe") = scx::PitchUniverse{});

    m.def("find_free_pairs", [](const scx::SimplicialComplex& k) {
        return json_to_python(scx::json::collapse_log_to_json(scx::find_free_pairs(k)));
    });
    m.def("collapse_above_dim", [](const scx::SimplicialComplex& k, int d) {
        auto res = scx::collapse_above_dim(k, d);
        return py::make_tuple(std::move(res.complex), json_to_python(scx::json::collapse_log_to_json(res.log)),
                              res.complete);
    }, py::arg("complex"), py::arg("dim"));

    m.def("sphere_report", [](const scx::SimplicialComplex& k) {
        const scx::PitchUniverse u;
        return json_to_python(scx::json::sphere_report_to_json(scx::sphere_report(k, u), u));
    });

    m.def("verify", [] {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& r : scx::run_verification())
            out.emplace_back(r.name, r.passed, r.detail);
        return out;
    }, "Run every reproduction check; returns (name, passed, detail) tuples.");
}
