#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "zetaval/appendix.hpp"
#include "zetaval/bernoulli.hpp"
#include "zetaval/congruence.hpp"
#include "zetaval/dirichlet.hpp"
#include "zetaval/errors.hpp"
#include "zetaval/lvalues.hpp"
#include "zetaval/suites.hpp"
#include "zetaval/sums.hpp"

namespace py = pybind11;
using namespace zetaval;

namespace {

py::object to_fraction(const Rational& r)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.to_string());
}

Rational from_python(const py::handle& value)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return Rational::parse(py::str(fraction(value)).cast<std::string>());
}

py::list coefficients(const RationalPolynomial& p)
{
    py::list out;
    for (const auto& c : p.coefficients()) {
        out.append(to_fraction(c));
    }
    return out;
}

RealCharacter as_character(const py::handle& chi)
{
    if (py::isinstance<py::str>(chi)) {
        return parse_character(chi.cast<std::string>());
    }
    return chi.cast<RealCharacter>();
}

Rational l_value(const RealCharacter& chi, std::size_t n, const std::string& route)
{
    const auto r = parse_route(route);
    if (!r) {
        throw DomainError("unknown route '" + route + "'");
    }
    switch (*r) {
    case Route::closed_form:
        return l_neg(chi, n);
    case Route::integral:
        return l_neg_integral(chi, n);
    case Route::hurwitz_scaled:
        return l_neg_hurwitz(chi, n);
    default:
        throw DomainError("route '" + route + "' does not apply to L-values");
    }
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact values of zeta and L-functions at non-positive integers";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ArithmeticError>(m, "ArithmeticError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<RingMismatchError>(m, "RingMismatchError", base.ptr());
    py::register_exception<CharacterError>(m, "CharacterError", base.ptr());
    py::register_exception<HypothesisError>(m, "HypothesisError", base.ptr());

    py::class_<RealCharacter>(m, "Character")
        .def(py::init([](const std::string& literal) { return parse_character(literal); }), py::arg("literal"))
        .def_static("from_table",
                    [](unsigned long k, const py::list& values) {
                        std::vector<Rational> v;
                        for (const auto& x : values) {
                            v.push_back(from_python(x));
                        }
                        return character_from_table(k, std::move(v));
                    })
        .def_property_readonly("modulus", &RealCharacter::modulus)
        .def_property_readonly("label", &RealCharacter::label)
        .def_property_readonly("is_even", &RealCharacter::is_even)
        .def_property_readonly("is_odd", &RealCharacter::is_odd)
        .def_property_readonly("is_trivial", &RealCharacter::is_trivial)
        .def_property_readonly("is_primitive", &RealCharacter::is_primitive)
        .def("__call__", [](const RealCharacter& chi, long r) { return to_fraction(chi(r)); })
        .def("__repr__", [](const RealCharacter& chi) { return "Character('" + chi.label() + "')"; });

    m.def("bernoulli", [](std::size_t n) { return to_fraction(bernoulli_number(n)); }, py::arg("n"));
    m.def("bernoulli_poly", [](std::size_t n) { return coefficients(bernoulli_poly(n)); }, py::arg("n"),
          "Coefficients of B_n(x), constant term first.");
    m.def(
        "euler_poly",
        [](const py::object& c, std::size_t n) { return coefficients(euler_poly(EulerParameter<Rational>(from_python(c)), n)); },
        py::arg("c"), py::arg("n"));
    m.def("power_sum_poly", [](std::size_t n) { return coefficients(s_n(n)); }, py::arg("n"));
    m.def(
        "shifted_power_sum_poly",
        [](std::size_t n, const py::object& a) { return coefficients(s_na(PartialSumSpec(n, from_python(a)))); },
        py::arg("n"), py::arg("a"));

    m.def("zeta", [](std::size_t n) { return to_fraction(riemann_neg(n)); }, py::arg("n"), "zeta(-n)");
    m.def(
        "zeta_even",
        [](std::size_t n) {
            const PiPower z = zeta_even_positive(n);
            return py::make_tuple(to_fraction(z.coefficient), z.power);
        },
        py::arg("n"), "zeta(2n) as (coefficient, power of pi)");
    m.def(
        "hurwitz",
        [](std::size_t n, const py::object& a, const std::string& route) {
            const Rational av = from_python(a);
            if (route == "integral") {
                return to_fraction(hurwitz_neg_integral(n, av));
            }
            if (route != "closed_form") {
                throw DomainError("unknown route '" + route + "'");
            }
            return to_fraction(hurwitz_neg(n, av));
        },
        py::arg("n"), py::arg("a"), py::arg("route") = "closed_form", "zeta(-n, a)");

    m.def(
        "generalized_bernoulli",
        [](const py::object& chi, std::size_t n) { return to_fraction(generalized_bernoulli_number(as_character(chi), n)); },
        py::arg("chi"), py::arg("n"));
    m.def(
        "l_value",
        [](const py::object& chi, std::size_t n, const std::string& route) {
            return to_fraction(l_value(as_character(chi), n, route));
        },
        py::arg("chi"), py::arg("n"), py::arg("route") = "closed_form", "L(-n, chi)");
    m.def(
        "twisted_l_value",
        [](const py::object& chi, std::size_t n, const py::object& a) {
            return to_fraction(twisted_l_neg(as_character(chi), n, from_python(a)));
        },
        py::arg("chi"), py::arg("n"), py::arg("a"), "L(-n, a, chi)");
    m.def(
        "lerch",
        [](const py::object& c, std::size_t k, const py::object& a) {
            return to_fraction(lerch_special(EulerParameter<Rational>(from_python(c)), k, from_python(a)));
        },
        py::arg("c"), py::arg("k"), py::arg("a"));

    m.def(
        "prop_a1",
        [](std::uint64_t p, std::size_t n) {
            const PropA1Verdict v = check_prop_a1_at(p, n);
            py::dict d;
            d["p"] = v.p;
            d["n"] = v.n;
            d["branch"] = std::string(branch_name(v.branch));
            d["value"] = to_fraction(v.b_value);
            d["holds"] = v.holds;
            return d;
        },
        py::arg("p"), py::arg("n"));

    m.def("suite_names", [] {
        std::vector<std::string> out;
        for (const auto name : suite_names()) {
            out.emplace_back(name);
        }
        return out;
    });
    m.def(
        "verify",
        [](const std::string& name, std::optional<std::size_t> n_max, unsigned jobs) {
            SuiteParams params;
            params.n_max = n_max;
            params.jobs = jobs;
            VerificationReport report;
            {
                py::gil_scoped_release release;
                report = run_suite(name, params);
            }
            std::ostringstream summary;
            report.print_summary(summary);
            py::dict d;
            d["checks"] = report.checks();
            d["failures"] = report.failures();
            d["passed"] = report.passed();
            d["summary"] = summary.str();
            return d;
        },
        py::arg("name"), py::arg("n_max") = py::none(), py::arg("jobs") = 1);

    m.def(
        "golden_cell",
        [](const std::string& label, std::size_t n) -> std::optional<std::string> {
            const auto cell = golden_cell(label, n);
            if (!cell) {
                return std::nullopt;
            }
            return std::string(*cell);
        },
        py::arg("label"), py::arg("n"));
}
