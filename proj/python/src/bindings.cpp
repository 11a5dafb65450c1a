// Thin pybind11 layer. Exact values cross the boundary as strings; the Python package turns them
// into int / Fraction.

#include "pperm/combinat.hpp"
#include "pperm/ehrhart.hpp"
#include "pperm/faces.hpp"
#include "pperm/polytope.hpp"
#include "pperm/volume.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pperm;

namespace {

std::vector<std::string> coeffs(const Polynomial& p)
{
    std::vector<std::string> out;
    for (auto& c : p.coeffs())
        out.push_back(to_string(c));
    return out;
}

HMethod hmethod(const std::string& s)
{
    if (s == "from_f")
        return HMethod::from_f;
    if (s == "closed")
        return HMethod::closed;
    if (s == "stellohedron")
        return HMethod::stellohedron;
    if (s == "orientation")
        return HMethod::orientation;
    throw std::invalid_argument("unknown h-polynomial method: " + s);
}

}  // namespace

PYBIND11_MODULE(_core, mod)
{
    mod.doc() = "exact invariants of partial permutohedra";

    mod.def("vertices", [](int m, int n) { return vertices(PPSpec(m, n)).points; }, py::arg("m"), py::arg("n"));
    mod.def(
        "facets",
        [](int m, int n) {
            std::vector<std::pair<IntVec, std::int64_t>> out;
            for (auto& r : facets(PPSpec(m, n)).rows)
                out.emplace_back(r.a, r.b);
            return out;
        },
        py::arg("m"), py::arg("n"));
    mod.def("count_points", [](int m, int n, std::int64_t t) { return count_points(PPSpec(m, n), t); }, py::arg("m"),
            py::arg("n"), py::arg("t"));
    mod.def("f_vector", &f_vector, py::arg("m"), py::arg("n"));
    mod.def(
        "h_poly", [](int m, int n, const std::string& method) { return coeffs(h_poly(m, n, hmethod(method))); },
        py::arg("m"), py::arg("n"), py::arg("method") = "closed");
    mod.def(
        "nvol",
        [](int m, int n, const std::string& method) {
            if (method == "oracle")
                return nvol_oracle(m, n).str();
            if (method == "small_n")
                return nvol_small_n(m, n).str();
            if (method == "three_term")
                return nvol_three_term(m, n).str();
            if (method == "recursive")
                return nvol_recursive(m, n).str();
            throw std::invalid_argument("use nvol_all_methods for method " + method);
        },
        py::arg("m"), py::arg("n"), py::arg("method") = "recursive");
    mod.def(
        "nvol_all_methods",
        [](int m, int n) {
            std::vector<std::pair<std::string, std::string>> out;
            for (auto& r : nvol_all_methods(m, n))
                out.emplace_back(to_string(r.method), to_string(r.value));
            return out;
        },
        py::arg("m"), py::arg("n"));
    mod.def(
        "nvol_poly", [](int m, bool shifted) { return coeffs(nvol_poly(m, shifted ? PolyVariable::N : PolyVariable::n)); },
        py::arg("m"), py::arg("shifted") = false);
    mod.def(
        "ehrhart",
        [](int m, int n, const std::string& method) { return coeffs(ehrhart(m, n, parse_ehr_method(method)).poly); },
        py::arg("m"), py::arg("n"), py::arg("method") = "interpolate");
    mod.def(
        "is_conjectural", [](const std::string& method) { return is_conjectural(parse_ehr_method(method)); },
        py::arg("method"));
    mod.def("draconian_count", [](int m, bool ehrhart_mode) {
        return enumerate_draconian(m, ehrhart_mode ? DraconianMode::ehrhart : DraconianMode::volume).size();
    });
}
