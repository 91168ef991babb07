#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "derivkernel/curves.hpp"
#include "derivkernel/derivation.hpp"
#include "derivkernel/errors.hpp"
#include "derivkernel/invariants.hpp"
#include "derivkernel/kernelsearch.hpp"
#include "derivkernel/parser.hpp"
#include "derivkernel/transform.hpp"

namespace py = pybind11;
using namespace dk;

namespace {

Rational to_rational(const py::handle& h) {
    if (py::isinstance<Rational>(h)) return h.cast<Rational>();
    if (py::isinstance<py::int_>(h)) return Rational(h.cast<long>());
    if (py::isinstance<py::str>(h)) return Rational::parse(h.cast<std::string>());
    throw DomainError("expected Rational, int or 'p/q' string");
}

std::map<std::string, Rational> to_assignment(const py::dict& d) {
    std::map<std::string, Rational> out;
    for (const auto& [k, v] : d) out[k.cast<std::string>()] = to_rational(v);
    return out;
}

std::vector<Rational> to_rational_vector(const py::sequence& seq) {
    std::vector<Rational> out;
    for (const auto& item : seq) out.push_back(to_rational(item));
    return out;
}

py::list from_rational_vector(const std::vector<Rational>& v) {
    py::list out;
    for (const auto& x : v) out.append(x);
    return out;
}

// The library shares varsets as shared_ptr<const VarSet>; pybind11 holders
// must be non-const. VarSet is immutable, so shedding the const for the
// python holder cannot break anything.
std::shared_ptr<VarSet> unconst(const VarSetPtr& p) {
    return std::const_pointer_cast<VarSet>(p);
}

}  // namespace

PYBIND11_MODULE(_derivkernel, m) {
    m.doc() = "exact invariants of plane algebraic curves via derivation kernels";

    py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);
    py::register_exception<VarsetError>(m, "VarsetMismatch", PyExc_ValueError);
    py::register_exception<DomainError>(m, "MathDomainError", PyExc_ValueError);

    py::class_<Rational>(m, "Rational")
        .def(py::init<long>())
        .def(py::init<long, long>())
        .def(py::init(&Rational::parse))
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("is_zero", &Rational::is_zero);
    py::implicitly_convertible<long, Rational>();
    py::implicitly_convertible<std::string, Rational>();

    py::class_<VarSet, std::shared_ptr<VarSet>>(m, "VarSet")
        .def(py::init([](std::vector<std::string> names) {
            return unconst(VarSet::create(std::move(names)));
        }))
        .def("__len__", &VarSet::size)
        .def("names", &VarSet::names)
        .def("__repr__", [](const VarSet& v) {
            std::string s = "VarSet([";
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v.name(i);
            return s + "])";
        });

    py::class_<Polynomial>(m, "Polynomial")
        .def_static(
            "parse",
            [](const std::string& text, const std::shared_ptr<VarSet>& vars) {
                return parse_polynomial(text, vars);
            },
            py::arg("text"), py::arg("vars"))
        .def_static("constant",
                    [](const std::shared_ptr<VarSet>& vars, const py::handle& c) {
                        return Polynomial::constant(vars, to_rational(c));
                    })
        .def("vars", [](const Polynomial& p) { return unconst(p.vars()); })
        .def("is_zero", &Polynomial::is_zero)
        .def("total_degree", &Polynomial::total_degree)
        .def("term_count", &Polynomial::term_count)
        .def("__str__", &Polynomial::str)
        .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.str() + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const Polynomial& p, unsigned k) { return p.pow(k); })
        .def("evaluate",
             [](const Polynomial& p, const py::dict& point) { return p.evaluate(to_assignment(point)); })
        .def("derivative", [](const Polynomial& p, const std::string& var) {
            auto idx = p.vars()->index(var);
            if (!idx) throw VarsetError("unknown variable: " + var);
            return p.derivative(*idx);
        });

    py::class_<RationalFunction>(m, "RationalFunction")
        .def(py::init<Polynomial>())
        .def(py::init<Polynomial, Polynomial>())
        .def_static(
            "parse",
            [](const std::string& text, const std::shared_ptr<VarSet>& vars) {
                return parse_rational_function(text, vars);
            },
            py::arg("text"), py::arg("vars"))
        .def("num", &RationalFunction::num)
        .def("den", &RationalFunction::den)
        .def("is_zero", &RationalFunction::is_zero)
        .def("__str__", &RationalFunction::str)
        .def("__repr__",
             [](const RationalFunction& r) { return "RationalFunction('" + r.str() + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def("__eq__", [](const RationalFunction& a, const RationalFunction& b) {
            return rf_equal(a, b);
        });
    py::implicitly_convertible<Polynomial, RationalFunction>();
    m.def("rf_equal", &rf_equal);

    py::class_<Derivation>(m, "Derivation")
        .def(py::init([](const std::shared_ptr<VarSet>& vars, const py::dict& images,
                         const std::string& name) {
                 std::map<std::string, Polynomial> imgs;
                 for (const auto& [k, v] : images) {
                     std::string var = k.cast<std::string>();
                     if (py::isinstance<py::str>(v))
                         imgs.emplace(var, parse_polynomial(v.cast<std::string>(), vars));
                     else
                         imgs.emplace(var, v.cast<Polynomial>());
                 }
                 return Derivation(vars, std::move(imgs), name);
             }),
             py::arg("vars"), py::arg("images"), py::arg("name") = "")
        .def("name", &Derivation::name)
        .def("vars", [](const Derivation& d) { return unconst(d.vars()); })
        .def("image",
             [](const Derivation& d, const std::string& var) {
                 auto idx = d.vars()->index(var);
                 if (!idx) throw VarsetError("unknown variable: " + var);
                 return d.image(*idx);
             })
        .def("apply", py::overload_cast<const Polynomial&>(&Derivation::apply, py::const_))
        .def("apply", py::overload_cast<const RationalFunction&>(&Derivation::apply, py::const_))
        .def("specialize",
             [](const Derivation& d, const py::dict& pins) {
                 std::map<std::string, Rational> p;
                 for (const auto& [k, v] : pins) p[k.cast<std::string>()] = to_rational(v);
                 return d.specialize(p);
             })
        .def("weight_eigenvalue", &Derivation::weight_eigenvalue)
        .def("__repr__", [](const Derivation& d) {
            return "Derivation('" + (d.name().empty() ? "?" : d.name()) + "')";
        });
    m.def("commutator", &commutator);
    m.def(
        "in_kernel",
        [](const std::vector<Derivation>& ds, const RationalFunction& r) { return in_kernel(ds, r); },
        py::arg("derivations"), py::arg("value"));

    m.def("weitzenbock", &weitzenbock, py::arg("d"));
    m.def("euler_weight", &euler_weight, py::arg("d"));
    m.def("hyper_vars", [](int d) { return unconst(HyperCoeffSpace::make(d).vars); }, py::arg("d"));
    m.def("ternary_vars", [](int d) { return unconst(TernaryCoeffSpace::make(d).vars); },
          py::arg("d"));
    m.def(
        "gl3_derivations", [](int d) { return gl3_derivations(d).all; }, py::arg("d"));

    py::class_<CurveDerivationSet>(m, "CurveDerivationSet")
        .def_readonly("d", &CurveDerivationSet::d)
        .def_property_readonly("vars",
                               [](const CurveDerivationSet& s) { return unconst(s.vars); })
        .def_readonly("derivations", &CurveDerivationSet::derivations)
        .def("__repr__", [](const CurveDerivationSet& s) {
            return "CurveDerivationSet(case='" + curve_case_name(s.curve_case) +
                   "', d=" + std::to_string(s.d) + ")";
        });
    m.def(
        "curve_derivation_set",
        [](int d, const std::string& name) {
            return curve_derivation_set(d, curve_case_from_name(name));
        },
        py::arg("d"), py::arg("case"));

    m.def("z_invariant", &z_invariant, py::arg("d"), py::arg("i"));
    m.def("rational_invariant_generators", &rational_invariant_generators, py::arg("d"));
    m.def("j_invariant_c3", &j_invariant_c3);

    m.def(
        "moduli_vector",
        [](int d, const py::sequence& coeffs) {
            return from_rational_vector(
                moduli_vector(HyperCurve::make(d, to_rational_vector(coeffs))).j);
        },
        py::arg("d"), py::arg("coeffs"));
    m.def(
        "curve_from_moduli",
        [](int d, const py::sequence& j) {
            return from_rational_vector(curve_from_moduli(ModuliVector{d, to_rational_vector(j)}).coeffs);
        },
        py::arg("d"), py::arg("j"));
    m.def(
        "normalize_curve",
        [](int d, const py::sequence& coeffs) {
            NormalizedCurve n = normalize(HyperCurve::make(d, to_rational_vector(coeffs)));
            return py::make_tuple(from_rational_vector(n.curve.coeffs), n.shift);
        },
        py::arg("d"), py::arg("coeffs"));
    m.def(
        "isomorphic",
        [](int d, const py::sequence& c1, const py::sequence& c2) -> std::optional<Rational> {
            return isomorphic(HyperCurve::make(d, to_rational_vector(c1)),
                              HyperCurve::make(d, to_rational_vector(c2)));
        },
        py::arg("d"), py::arg("coeffs1"), py::arg("coeffs2"));
    m.def(
        "transform_coeff_values",
        [](int d, const py::sequence& coeffs, const py::handle& alpha, const py::handle& b) {
            return from_rational_vector(
                transform_coeff_values(d, to_rational_vector(coeffs), to_rational(alpha), to_rational(b)));
        },
        py::arg("d"), py::arg("coeffs"), py::arg("alpha"), py::arg("b"));
    m.def("translation_formula", &translation_formula, py::arg("d"), py::arg("i"));

    m.def(
        "check_invariance",
        [](const RationalFunction& phi, const std::string& family, int d) {
            return check_invariance(phi, family_from_name(family), d);
        },
        py::arg("phi"), py::arg("family"), py::arg("d"));

    py::class_<KernelReport>(m, "KernelReport")
        .def_readonly("basis", &KernelReport::basis)
        .def_readonly("in_kernel", &KernelReport::in_kernel)
        .def_readonly("jacobian_rank", &KernelReport::jacobian_rank)
        .def_readonly("bound", &KernelReport::bound)
        .def("all_in_kernel", &KernelReport::all_in_kernel)
        .def("rank_exceeds_bound", &KernelReport::rank_exceeds_bound)
        .def("__repr__", [](const KernelReport& r) {
            return "KernelReport(basis=" + std::to_string(r.basis.size()) +
                   ", jacobian_rank=" + std::to_string(r.jacobian_rank) + ")";
        });

    m.def(
        "joint_kernel",
        [](const std::shared_ptr<VarSet>& vars, unsigned degree,
           const std::vector<Derivation>& ds, std::optional<long> weight,
           std::optional<std::vector<long>> var_weights) {
            AnsatzSpec spec{vars, degree, weight,
                            var_weights ? *var_weights : std::vector<long>{}, ds};
            return joint_kernel(spec);
        },
        py::arg("vars"), py::arg("degree"), py::arg("derivations"),
        py::arg("weight") = std::nullopt, py::arg("var_weights") = std::nullopt);
    m.def(
        "hyper_weights",
        [](int d) { return HyperCoeffSpace::make(d).weights(); },
        py::arg("d"));
    m.def(
        "verify_generator_set",
        [](const std::vector<std::pair<std::string, Polynomial>>& gens,
           const std::vector<Derivation>& ds, std::optional<int> bound, std::uint64_t seed) {
            return verify_generator_set(gens, ds, bound, seed);
        },
        py::arg("generators"), py::arg("derivations"), py::arg("bound") = std::nullopt,
        py::arg("seed") = kDefaultJacobianSeed);
}
