#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "qedtrees/checks.hpp"
#include "qedtrees/format.hpp"
#include "qedtrees/renormalization.hpp"

namespace py = pybind11;
using namespace qedtrees;

namespace {

Rational to_rational(const py::object& c)
{
    if (py::isinstance<py::int_>(c))
        return Rational(py::str(c).cast<std::string>());
    return parse_rational(py::str(c).cast<std::string>());
}

Element element_of(AlgebraTag tag, const std::string& text)
{
    return parse_element(tag, text);
}

py::list terms_of(const Element& x)
{
    py::list out;
    for (const auto& [word, c] : display_terms(x))
        out.append(py::make_tuple(render_word(x.tag(), word), to_string(c)));
    return out;
}

py::list terms_of(const Tensor& x)
{
    py::list out;
    for (const auto& [key, c] : display_terms(x)) {
        py::list slots;
        for (std::size_t s = 0; s < key.size(); ++s)
            slots.append(render_word(x.tags()[s], key[s]));
        out.append(py::make_tuple(py::tuple(slots), to_string(c)));
    }
    return out;
}

py::dict report(const std::string& ring, std::size_t order, std::uint64_t seed, std::size_t d, bool zero)
{
    const bool matrix = ring == "matrix";
    if (!matrix && ring != "scalar")
        throw std::invalid_argument("ring must be scalar or matrix");
    const auto kind = matrix ? Character::Kind::Matrix : Character::Kind::Scalar;
    const auto n = static_cast<std::uint32_t>(order);
    const std::size_t dim = matrix ? d : 0;
    const auto ug = make_toy_character(AlgebraTag::Photon, seed, kind, d, n);
    const auto ue = make_toy_character(AlgebraTag::Electron, seed, kind, d, n);
    const auto cg = zero ? Character::zero(AlgebraTag::Charge, dim)
                         : make_toy_character(AlgebraTag::Charge, seed, Character::Kind::Scalar, 0, n);
    const auto ce = zero ? Character::zero(AlgebraTag::Electron, dim)
                         : make_toy_character(AlgebraTag::Electron, seed + 1000, Character::Kind::Scalar, 0, n);
    const auto photon = dyson_check_photon(ug, cg, order);
    const auto electron = dyson_check_electron(ue, cg, ce, order);
    py::dict out;
    out["photon"] = py::module_::import("json").attr("loads")(photon.to_json().dump());
    out["electron"] = py::module_::import("json").attr("loads")(electron.to_json().dump());
    out["passed"] = photon.passed && electron.passed;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Hopf algebras of planar binary trees";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::enum_<AlgebraTag>(m, "Algebra")
        .value("Photon", AlgebraTag::Photon)
        .value("Electron", AlgebraTag::Electron)
        .value("Charge", AlgebraTag::Charge)
        .value("ChargeNC", AlgebraTag::ChargeNC);

    py::class_<Tree>(m, "Tree")
        .def(py::init<>())
        .def_static("parse", &parse_tree)
        .def_property_readonly("order", &Tree::order)
        .def_property_readonly("left", &Tree::left)
        .def_property_readonly("right", &Tree::right)
        .def_property_readonly("name", [](Tree t) { return canonical_name(t); })
        .def("is_root", &Tree::is_root)
        .def("__str__", [](Tree t) { return render(t); })
        .def("__repr__", [](Tree t) { return "Tree('" + render(t) + "')"; })
        .def("__hash__", &Tree::hash)
        .def(py::self == py::self)
        .def(py::self < py::self);

    m.def("enumerate_trees", [](std::uint32_t n) { return enumerate(n); }, py::arg("n"));
    m.def("graft", &graft);
    m.def("over", &over);
    m.def("under", &under);
    m.def("decompose_over", &decompose_over);
    m.def("decompose_under", &decompose_under);

    py::class_<Element>(m, "Element")
        .def(py::init(&element_of), py::arg("algebra"), py::arg("text"))
        .def_static("unit", &Element::unit)
        .def_static("tree", &embed_tree)
        .def_property_readonly("algebra", &Element::tag)
        .def_property_readonly("terms", [](const Element& x) { return terms_of(x); })
        .def("counit", [](const Element& x) { return to_string(counit(x)); })
        .def("to_json", [](const Element& x) { return to_json(x).dump(); })
        .def_static("from_json", [](const std::string& s) { return element_from_json(nlohmann::json::parse(s)); })
        .def("latex", [](const Element& x) { return to_text(x, Format::Latex); })
        .def("__str__", [](const Element& x) { return to_text(x); })
        .def("__repr__", [](const Element& x) { return "Element(" + to_text(x) + ")"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def("__rmul__", [](const Element& x, const py::object& c) { return to_rational(c) * x; })
        .def("__neg__", [](const Element& x) { return -x; })
        .def(py::self == py::self);

    py::class_<Tensor>(m, "Tensor")
        .def(py::init([](const std::vector<AlgebraTag>& tags, const std::string& text) {
                 return parse_tensor(tags, text);
             }),
             py::arg("algebras"), py::arg("text"))
        .def_property_readonly("algebras", &Tensor::tags)
        .def_property_readonly("terms", [](const Tensor& x) { return terms_of(x); })
        .def("to_json", [](const Tensor& x) { return to_json(x).dump(); })
        .def_static("from_json", [](const std::string& s) { return tensor_from_json(nlohmann::json::parse(s)); })
        .def("latex", [](const Tensor& x) { return to_text(x, Format::Latex); })
        .def("__str__", [](const Tensor& x) { return to_text(x); })
        .def("__repr__", [](const Tensor& x) { return "Tensor(" + to_text(x) + ")"; })
        .def("__len__", &Tensor::size)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self == py::self);

    m.def("delta_p_e", &delta_p_e);
    m.def("delta_p_gamma", &delta_p_gamma);
    m.def("antipode_p_e", &antipode_p_e);
    m.def("antipode_p_gamma", &antipode_p_gamma);
    m.def("delta_alpha", &delta_alpha);
    m.def("delta_alpha_nc", &delta_alpha_nc);
    m.def("delta_small", &delta_small);
    m.def("antipode_alpha", &antipode_alpha);
    m.def("antipode_alpha_nc", &antipode_alpha_nc);
    m.def("coaction_e", [](const Element& x) { return delta_e_coaction(x); });
    m.def("coaction_gamma", [](const Element& x) { return delta_gamma_coaction(x); });
    m.def("delta_e", [](const Element& x) { return electron_renorm_coaction(x); });
    m.def("delta_gamma", [](const Element& x) { return photon_renorm_coaction(x); });
    m.def("sigma", &sigma);

    m.def("suites", &suite_names);
    m.def("corruptions", &Structures::corruption_names);
    m.def(
        "check",
        [](const std::string& suite, std::uint32_t order, unsigned jobs, unsigned seeds, unsigned dyson_seeds,
           std::optional<std::string> corrupt) {
            const auto maps = corrupt ? Structures::corrupted(*corrupt) : Structures::standard();
            const CheckOptions o{order, jobs, seeds, dyson_seeds};
            std::vector<LawResult> results;
            {
                py::gil_scoped_release release;
                results = run_suite(suite, *maps, o);
            }
            py::list out;
            for (const auto& r : results) {
                py::dict d;
                d["suite"] = r.suite;
                d["law"] = r.law;
                d["cases"] = r.cases;
                d["passed"] = r.passed;
                d["counterexample"] = r.counterexample;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("order") = 3, py::arg("jobs") = 1, py::arg("seeds") = 20,
        py::arg("dyson_seeds") = 5, py::arg("corrupt") = py::none());

    m.def("dyson", &report, py::arg("ring") = "scalar", py::arg("order") = 4, py::arg("seed") = 1, py::arg("d") = 4,
          py::arg("zero_counterterms") = false);
}
