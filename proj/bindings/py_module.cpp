// Python bindings: a thin convenience layer over the C++ library. Heavy
// objects stay opaque; results cross the boundary as plain python types.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tamearr/certify.hpp"
#include "tamearr/sequences.hpp"

namespace py = pybind11;
using namespace tamearr;

namespace {

Arrangement from_lists(int dim, const std::vector<std::vector<std::string>>& rows,
                       const std::vector<int>& mult)
{
    Arrangement a;
    a.dim = dim;
    for (const auto& r : rows) {
        Form f;
        for (const auto& c : r) f.push_back(rat_from_string(c));
        a.forms.push_back(normalize_form(std::move(f)));
    }
    a.mult = mult.empty() ? std::vector<int>(a.n(), 1) : mult;
    a.validate();
    return a;
}

std::vector<int> chi_coeffs(const Arrangement& a)
{
    auto [ess, trivial] = essentialize(a);
    (void)trivial;
    if (ess.empty()) return {1};
    auto p = multi_char_poly<Rational>(ess, 0);
    return std::vector<int>(p.c.begin(), p.c.end());
}

py::dict free_info(const Arrangement& a)
{
    auto [ess, trivial] = essentialize(a);
    py::dict d;
    if (ess.empty()) {
        d["free"] = true;
        d["exponents"] = std::vector<int>(trivial, 0);
        return d;
    }
    auto fr = is_free<Rational>(ess, 0);
    d["free"] = fr.free;
    if (fr.free) {
        std::vector<int> exps(trivial, 0);
        exps.insert(exps.end(), fr.exponents.begin(), fr.exponents.end());
        d["exponents"] = exps;
    }
    return d;
}

py::dict tame_info(const Arrangement& a)
{
    auto [ess, trivial] = essentialize(a);
    (void)trivial;
    py::dict d;
    if (ess.empty()) {
        d["tame"] = true;
        d["pd"] = std::vector<int>{};
        return d;
    }
    auto prof = pd_profile<Rational>(ess, 0);
    d["tame"] = prof.tame;
    d["pd"] = prof.pd_omega;
    return d;
}

py::object certify_json(const Arrangement& a, long budget_ms)
{
    Budget b = budget_ms > 0 ? Budget::from_ms(budget_ms) : Budget::unlimited();
    auto cert = certify_tame<Rational>(a, 0, b);
    if (!cert) return py::none();
    py::dict d;
    d["json"] = cert->to_json();
    d["rule"] = rule_name(cert->rule);
    d["verified"] = verify_certificate<Rational>(*cert, 0);
    return d;
}

}  // namespace

PYBIND11_MODULE(_tamearr, m)
{
    m.doc() = "logarithmic module computations for hyperplane multiarrangements";

    py::register_exception<InputError>(m, "InputError");

    py::class_<Arrangement>(m, "Arrangement")
        .def(py::init(&from_lists), py::arg("dim"), py::arg("hyperplanes"),
             py::arg("multiplicities") = std::vector<int>{})
        .def_readonly("dim", &Arrangement::dim)
        .def("n", &Arrangement::n)
        .def("rank", &Arrangement::rank)
        .def("is_simple", &Arrangement::is_simple)
        .def("total_mult", &Arrangement::total_mult)
        .def("to_json", [](const Arrangement& a) { return arrangement_to_json(a); })
        .def("__repr__", [](const Arrangement& a) {
            return "<Arrangement dim=" + std::to_string(a.dim) + " n=" +
                   std::to_string(a.n()) + " |m|=" + std::to_string(a.total_mult()) + ">";
        });

    m.def("load", &load_arrangement, py::arg("path"), "load an arrangement from a JSON file");
    m.def("chi", &chi_coeffs, py::arg("arrangement"),
          "characteristic polynomial coefficients, ascending by power");
    m.def("free", &free_info, py::arg("arrangement"),
          "freeness with exponents when free (exact arithmetic)");
    m.def("tame", &tame_info, py::arg("arrangement"),
          "projective dimension profile of the logarithmic form modules");
    m.def("certify", &certify_json, py::arg("arrangement"), py::arg("budget_ms") = 0,
          "search for a tameness certificate; returns None when undecided");
    m.def(
        "restrict",
        [](const Arrangement& a, int h) { return euler_restriction(a, h).arr; },
        py::arg("arrangement"), py::arg("h"), "Euler restriction to hyperplane h");
    m.def(
        "ziegler",
        [](const Arrangement& a, int h) { return ziegler_restriction(a, h).arr; },
        py::arg("arrangement"), py::arg("h"), "Ziegler restriction to hyperplane h");
}
