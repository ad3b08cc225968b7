#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clp/lang.hpp"
#include "clp/semantics.hpp"
#include "clp/solver.hpp"

namespace py = pybind11;

namespace {

clp::Program parse(const std::string& src, const std::string& default_label) {
    auto dflt = default_label == "one" ? clp::DefaultLabel::One : clp::DefaultLabel::Head;
    return clp::parse_program(src, dflt);
}

py::dict report_to_dict(const clp::SolveReport& r) {
    py::dict out;
    out["method"] = r.method;
    out["complete"] = r.complete;
    py::list models;
    for (const auto& m : r.models) {
        py::dict model;
        for (const auto& [atom, value] : m.entries()) {
            model[py::str(atom)] = clp::render_value(value);
        }
        models.append(model);
    }
    out["models"] = models;
    return out;
}

}  // namespace

PYBIND11_MODULE(_clp, m) {
    m.doc() = "causal logic programs under causal stable model semantics";

    py::class_<clp::Program>(m, "Program")
        .def("__str__", [](const clp::Program& p) { return clp::print_program(p); })
        .def_property_readonly("atoms", [](const clp::Program& p) {
            std::set<std::string> atoms = p.atoms();
            return std::vector<std::string>(atoms.begin(), atoms.end());
        });

    m.def("parse_program", &parse, py::arg("src"), py::arg("default_label") = "head");
    m.def("normalize", &clp::normalize);
    m.def("eval_term_text",
          [](const std::string& t) { return clp::render_value(clp::eval_term(clp::parse_term(t))); });

    m.def("solve", [](const clp::Program& p, const std::string& mode) {
        clp::Program n = clp::normalize(p);
        clp::SolveReport r = mode == "stratified" ? clp::solve_stratified(n)
                             : mode == "guess"    ? clp::solve_guess_check(n)
                             : mode == "gamma"    ? clp::solve_gamma(n)
                                                  : clp::solve_auto(n);
        return report_to_dict(r);
    }, py::arg("program"), py::arg("mode") = "auto");

    m.def("solve_text", [](const std::string& src, const std::string& mode) {
        clp::Program n = clp::normalize(clp::parse_program(src));
        clp::SolveReport r = mode == "stratified" ? clp::solve_stratified(n)
                             : mode == "guess"    ? clp::solve_guess_check(n)
                             : mode == "gamma"    ? clp::solve_gamma(n)
                                                  : clp::solve_auto(n);
        return report_to_dict(r);
    }, py::arg("src"), py::arg("mode") = "auto");

    m.def("query_text", [](const std::string& src, const std::string& expr) {
        clp::Program p = clp::normalize(clp::parse_program(src));
        clp::Formula f = clp::parse_formula_text(expr);
        clp::EvalContext ctx = clp::make_context(p);
        clp::SolveReport r = clp::solve_auto(p);
        py::list out;
        for (const auto& model : r.models) {
            clp::Value v = clp::eval_formula(model, f, ctx);
            out.append(py::make_tuple(!v.is_zero(), clp::render_value(v)));
        }
        return out;
    });

    m.def("check_stable_text", [](const std::string& src, const std::string& model_json) {
        clp::Program p = clp::normalize(clp::parse_program(src));
        clp::Interpretation i = clp::interp_from_json(model_json);
        return clp::is_stable_model(p, i);
    });
}
