// Python extension module: a thin string-and-number facade over the core.
//
// Every function takes polynomial expressions as strings (same grammar as
// the command line: integers, rationals p/q, X, Y, + - * ^, parentheses, no
// implicit multiplication) and returns plain python objects mirroring the
// `remspec --json` documents, so both interfaces expose identical fields.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "remspec/corpus.hpp"
#include "remspec/derivation.hpp"
#include "remspec/errors.hpp"
#include "remspec/newton.hpp"
#include "remspec/parse.hpp"
#include "remspec/report.hpp"
#include "remspec/spectrum.hpp"

namespace py = pybind11;
using namespace remspec;

namespace {

py::object to_py(const OrderedJson& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

RationalFunctionPair pair_of(const std::string& f, const std::string& g) {
    return RationalFunctionPair::make(parse_bipoly(f), parse_bipoly(g));
}

Derivation derivation_of(const std::string& a, const std::string& b) {
    return make_derivation(parse_bipoly(a), parse_bipoly(b));
}

} // namespace

PYBIND11_MODULE(_remspec, m) {
    m.doc() = "Exact spectrum, reducibility order and polygon bounds of "
              "rational first integrals of planar polynomial derivations";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const MathError& e) {
            PyErr_SetString(PyExc_ArithmeticError, e.what());
        }
    });

    m.def(
        "newton",
        [](const std::string& a, const std::string& b) {
            return to_py(to_json(bcount(derivation_of(a, b))));
        },
        py::arg("a"), py::arg("b"),
        "Newton polygon of the derivation a*d/dX + b*d/dY (supports shifted "
        "by (-1,0) and (0,-1)) and its lattice-point count over the first "
        "quadrant.");

    m.def(
        "darboux",
        [](const std::string& a, const std::string& b,
           const std::string& f) -> py::object {
            const std::optional<BiPoly> cof =
                cofactor_of(derivation_of(a, b), parse_bipoly(f));
            if (!cof) return py::none();
            return py::str(to_string(*cof));
        },
        py::arg("a"), py::arg("b"), py::arg("f"),
        "Cofactor of f when f is invariant under the derivation, else None.");

    m.def(
        "jacobian",
        [](const std::string& f, const std::string& g) {
            return to_py(to_json(jacobian_derivation(pair_of(f, g))));
        },
        py::arg("f"), py::arg("g"),
        "Reduced derivation annihilating the fraction f/g.");

    m.def(
        "spectrum",
        [](const std::string& f, const std::string& g, std::uint64_t seed) {
            return to_py(to_json(analyze_pencil(pair_of(f, g), seed)));
        },
        py::arg("f"), py::arg("g"), py::arg("seed") = 0,
        "Remarkable directions of the pencil of f/g with exact multiplicity "
        "data, the order of reducibility rho, |sigma|, |gamma| and deg R.");

    m.def(
        "verify",
        [](const std::string& f, const std::string& g,
           const std::optional<std::string>& a, const std::optional<std::string>& b,
           std::uint64_t seed) {
            if (a.has_value() != b.has_value()) {
                throw py::value_error("verify needs both a and b or neither");
            }
            std::optional<Derivation> d;
            if (a) d = derivation_of(*a, *b);
            return to_py(to_json(verify_remarkable_bounds(pair_of(f, g), d, seed)));
        },
        py::arg("f"), py::arg("g"), py::arg("a") = py::none(),
        py::arg("b") = py::none(), py::arg("seed") = 0,
        "Spectrum of f/g plus a mechanical check of every proved bound "
        "against the polygon count of the attached derivation (the supplied "
        "one, or the reduced jacobian-style one).");

    m.def(
        "indecomposable",
        [](const std::string& f, const std::string& g, int trials,
           std::uint64_t seed) {
            return to_py(to_json(indecomposability_test(pair_of(f, g), trials, seed)));
        },
        py::arg("f"), py::arg("g"), py::arg("trials") = 5, py::arg("seed") = 0,
        "Probabilistic composition test: an absolutely irreducible member "
        "certifies indecomposability; otherwise the fraction is reported as "
        "likely decomposable.");
}
