// Python bindings for the analysis pipeline.  The surface mirrors the CLI:
// build a function from a polynomial or value table, ask for verdicts, pull
// the full report, and construct bent functions from orthogonal arrays.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pbent/duality.hpp"
#include "pbent/orthogonal_array.hpp"
#include "pbent/report.hpp"
#include "pbent/scheme.hpp"

namespace py = pybind11;
using namespace pbent;

namespace {

py::int_ to_py_int(const BigInt& v) {
    const std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

PAryFunction make_from_poly(const std::string& text, int p, int n) {
    return anf_evaluate(parse_poly(text, PrimeModulus(p), n));
}

PAryFunction make_from_table(int p, int n, const std::vector<int>& values) {
    return PAryFunction(PrimeModulus(p), n, values);
}

std::string feasibility_name(FeasibilityKind kind) {
    switch (kind) {
        case FeasibilityKind::lst: return "lst";
        case FeasibilityKind::nlst: return "nlst";
        default: return "neither";
    }
}

} // namespace

PYBIND11_MODULE(pbent, m) {
    m.doc() = "Exact analysis of p-ary functions: bent verdicts, component "
              "graph classification, association scheme structure, duals, and "
              "orthogonal array constructions.";

    py::register_exception<ParseError>(m, "PolyParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionFailure", PyExc_ValueError);
    py::register_exception<InconsistencyError>(m, "InconsistencyFailure", PyExc_RuntimeError);

    py::class_<PAryFunction>(m, "Function")
        .def_static("from_poly", &make_from_poly, py::arg("poly"), py::arg("p"), py::arg("n"),
                    "Parse a polynomial over GF(p) in variables x0..x{n-1} and "
                    "tabulate it.")
        .def_static("from_table", &make_from_table, py::arg("p"), py::arg("n"),
                    py::arg("values"), "Wrap an explicit value table of length p**n.")
        .def_property_readonly("p", &PAryFunction::p)
        .def_property_readonly("n", &PAryFunction::n)
        .def("values",
             [](const PAryFunction& f) {
                 std::vector<int> out(static_cast<std::size_t>(f.size()));
                 for (Index x = 0; x < f.size(); ++x)
                     out[static_cast<std::size_t>(x)] = f(x);
                 return out;
             })
        .def("__call__", [](const PAryFunction& f, Index x) { return f(x); }, py::arg("x"))
        .def("__len__", [](const PAryFunction& f) { return f.size(); })
        .def("__eq__", [](const PAryFunction& a,
                          const PAryFunction& b) { return a == b; })
        .def("anf", [](const PAryFunction& f) { return anf_interpolate(f).to_string(); },
             "Algebraic normal form with coefficients in the symmetric range.")
        .def("digest", &table_digest, "Hex digest of the value table.")
        .def("is_even", &is_even)
        .def("level_set_sizes",
             [](const PAryFunction& f) {
                 const auto ls = level_sets(f);
                 std::vector<long long> out;
                 for (const auto& c : ls.classes)
                     out.push_back(static_cast<long long>(c.size()));
                 return out;
             },
             "Class sizes |D_0|, |D_1|, ..., |D_p|; requires f(0) = 0.")
        .def("is_bent", [](const PAryFunction& f) { return is_bent(f).bent; },
             "Exact Walsh criterion: |W_f(x)|^2 = p**n for every x.")
        .def("walsh",
             [](const PAryFunction& f) {
                 const auto s = walsh_transform(f);
                 py::list out;
                 for (const auto& w : s.values) {
                     py::list coeffs;
                     for (const auto& c : w.coeffs()) coeffs.append(to_py_int(c));
                     out.append(std::move(coeffs));
                 }
                 return out;
             },
             "Walsh coefficients per point as canonical coordinates over the "
             "power basis 1, zeta, ..., zeta^{p-2}.")
        .def("feasibility",
             [](const PAryFunction& f) { return feasibility_name(feasibility_verdict(f).kind); },
             "'lst', 'nlst', or 'neither': do level-set sizes and component "
             "graphs carry square-type parameters?")
        .def("regularity",
             [](const PAryFunction& f) { return regularity_label(classify_regularity(f).kind); })
        .def("dual",
             [](const PAryFunction& f) {
                 const auto reg = classify_regularity(f);
                 if (!reg.dual)
                     throw PreconditionError(
                         "the function is bent but not weakly regular; no dual");
                 return *reg.dual;
             },
             "The dual function read off the Walsh factorization; raises when "
             "the function is not weakly regular.")
        .def("is_scheme",
             [](const PAryFunction& f) { return scheme_check(f).is_scheme(); },
             "Do the level sets form a translation association scheme?")
        .def("is_amorphic",
             [](const PAryFunction& f) { return amorphic_check(f).amorphic; })
        .def("report",
             [](const PAryFunction& f, bool normalize) {
                 return analyze_function(f, AnalysisOptions{normalize}).text;
             },
             py::arg("normalize") = false, "Full plain-text analysis report.")
        .def("report_json",
             [](const PAryFunction& f, bool normalize) {
                 return analyze_function(f, AnalysisOptions{normalize}).json;
             },
             py::arg("normalize") = false, "The same report as a JSON document.")
        .def("__repr__", [](const PAryFunction& f) {
            return "<pbent.Function p=" + std::to_string(f.p()) +
                   " n=" + std::to_string(f.n()) + " " + anf_interpolate(f).to_string() + ">";
        });

    m.def("bush_oa_text",
          [](int p, int m_) { return oa_to_text(bush_construct(PrimeModulus(p), m_)); },
          py::arg("p"), py::arg("m"),
          "Bush orthogonal array OA(p^m + 1, p^m) of strength 2, index 1, in "
          "the text format.");
    m.def("bent_from_oa_text",
          [](const std::string& text, const std::string& partition) {
              const auto oa = oa_from_text(text);
              const auto part = partition.empty() ? default_partition(oa)
                                                  : parse_partition(partition, oa);
              return bent_from_oa(oa, part);
          },
          py::arg("text"), py::arg("partition") = std::string(),
          "Bent function from an orthogonal array and a row partition such as "
          "'0|1|2,3'; the default groups all rows but the last two singly.");
    m.def("validate_oa_text",
          [](const std::string& text) -> py::object {
              const auto v = validate_oa(oa_from_text(text));
              if (!v) return py::none();
              return py::make_tuple(v->row_a, v->row_b, v->col_a, v->col_b);
          },
          py::arg("text"),
          "None when the array has strength 2 and index 1, else the violating "
          "(row_a, row_b, col_a, col_b).");
}
