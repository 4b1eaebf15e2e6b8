#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cedille/deep_stack.hpp"
#include "cedille/erase.hpp"
#include "cedille/norm.hpp"
#include "cedille/parser.hpp"
#include "cedille/typecheck.hpp"

namespace py = pybind11;
using namespace cedille;

namespace {

PyObject* base_error = nullptr;
PyObject* parse_error = nullptr;
PyObject* type_error = nullptr;
PyObject* fuel_error = nullptr;

void raise(PyObject* cls, const Error& e, std::vector<std::pair<const char*, py::object>> extra = {}) {
    py::object inst = py::reinterpret_borrow<py::object>(cls)(e.what());
    inst.attr("code") = std::string(to_string(e.code()));
    for (auto& [k, v] : extra) inst.attr(k) = v;
    PyErr_SetObject(cls, inst.ptr());
}

void translate(std::exception_ptr p) {
    try {
        if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
        raise(parse_error, e, {{"line", py::int_(e.location().line)}, {"column", py::int_(e.location().column)}});
    } catch (const TypeError& e) {
        raise(type_error, e,
              {{"definition", py::str(e.definition())},
               {"subject", e.subject() ? py::object(py::str(print_term(e.subject()))) : py::none()}});
    } catch (const FuelExhausted& e) {
        raise(fuel_error, e);
    } catch (const Error& e) {
        raise(base_error, e);
    }
}

template <typename F>
auto deep(F&& f) -> decltype(f()) {
    decltype(f()) result;
    py::gil_scoped_release release;
    run_with_deep_stack([&] { result = f(); });
    return result;
}

TermSyntax syntax_of(bool erased) { return erased ? TermSyntax::Erased : TermSyntax::Annotated; }

std::vector<std::string> names(const VarSet& vs) {
    std::vector<std::string> out;
    for (const Var& v : vs) out.push_back(v.name);
    return out;
}

class Checker {
public:
    Checker(std::uint64_t fuel, bool strict) : checker_(CheckOptions{fuel, strict}) {}

    std::vector<std::pair<std::string, Term>> add(const std::string& source) {
        return deep([&] {
            SourceModule m = parse_module(source);
            std::vector<std::pair<std::string, Term>> out;
            for (const GlobalDef& d : m.definitions) {
                Judgment j = checker_.add(d);
                out.emplace_back(j.name.name, j.type);
            }
            return out;
        });
    }

    Term infer(const Term& t) {
        return deep([&] { return cedille::infer(checker_.context(), t, checker_.options()); });
    }

    Term whnf(const Term& t, std::uint64_t fuel) {
        return deep([&] {
            Fuel f(fuel);
            return cedille::whnf(checker_.context(), t, f);
        });
    }

    Term nf(const Term& t, std::uint64_t fuel) {
        return deep([&] {
            Fuel f(fuel);
            return cedille::nf(checker_.context(), t, f);
        });
    }

    bool def_eq(const Term& a, const Term& b, std::uint64_t fuel) {
        return deep([&] {
            Fuel f(fuel);
            return cedille::def_eq(checker_.context(), a, b, f);
        });
    }

    std::vector<std::string> definitions() const {
        std::vector<std::string> out;
        for (const auto& e : checker_.context().entries()) out.push_back(e.name.name);
        return out;
    }

private:
    ModuleChecker checker_;
};

}  // namespace

PYBIND11_MODULE(_cedille_core, m) {
    m.doc() = "Checker for Cedille Core";

    base_error = PyErr_NewException("cedille_core.CedilleError", PyExc_Exception, nullptr);
    parse_error = PyErr_NewException("cedille_core.ParseError", base_error, nullptr);
    type_error = PyErr_NewException("cedille_core.TypeCheckError", base_error, nullptr);
    fuel_error = PyErr_NewException("cedille_core.FuelExhausted", base_error, nullptr);
    m.attr("CedilleError") = py::handle(base_error);
    m.attr("ParseError") = py::handle(parse_error);
    m.attr("TypeCheckError") = py::handle(type_error);
    m.attr("FuelExhausted") = py::handle(fuel_error);
    py::register_exception_translator(translate);

    m.attr("DEFAULT_FUEL") = kDefaultFuel;

    py::class_<Term>(m, "Term")
        .def_property_readonly("tag", [](const Term& t) { return std::string(tag_name(t.tag())); })
        .def_property_readonly("size", &Term::size)
        .def("__str__", [](const Term& t) { return print_term(t); })
        .def("__repr__", [](const Term& t) { return "Term(" + print_term(t) + ")"; })
        .def("__eq__", [](const Term& a, const Term& b) { return alpha_eq(a, b); })
        .attr("__hash__") = py::none();

    m.def("parse_term", [](const std::string& s, bool erased) { return parse_term(s, syntax_of(erased)); },
          py::arg("source"), py::arg("erased") = false);
    m.def("print_term", &print_term, py::arg("term"));
    m.def("erase", [](const Term& t) { return deep([&] { return erase(t); }); }, py::arg("term"));
    m.def("is_pure", &is_pure, py::arg("term"));
    m.def("alpha_eq", &alpha_eq, py::arg("a"), py::arg("b"));
    m.def("free_vars", [](const Term& t) { return names(t.free_vars()); }, py::arg("term"));
    m.def(
        "subst", [](const Term& t, const std::string& x, const Term& v) { return subst(t, Var(x), v); },
        py::arg("term"), py::arg("var"), py::arg("value"));

    m.def(
        "nf",
        [](const Term& t, std::uint64_t fuel) {
            return deep([&] {
                Fuel f(fuel);
                return nf(Context(), t, f);
            });
        },
        py::arg("term"), py::arg("fuel") = kDefaultFuel);
    m.def(
        "def_eq",
        [](const Term& a, const Term& b, std::uint64_t fuel) {
            return deep([&] {
                Fuel f(fuel);
                return def_eq(Context(), a, b, f);
            });
        },
        py::arg("a"), py::arg("b"), py::arg("fuel") = kDefaultFuel);
    m.def(
        "infer",
        [](const Term& t, std::uint64_t fuel) {
            return deep([&] { return infer(Context(), t, CheckOptions{fuel, false}); });
        },
        py::arg("term"), py::arg("fuel") = kDefaultFuel);
    m.def(
        "check_module",
        [](const std::string& source, std::uint64_t fuel, bool strict) {
            return Checker(fuel, strict).add(source);
        },
        py::arg("source"), py::arg("fuel") = kDefaultFuel, py::arg("strict_intersections") = false);

    py::class_<Checker>(m, "Checker")
        .def(py::init<std::uint64_t, bool>(), py::arg("fuel") = kDefaultFuel, py::arg("strict_intersections") = false)
        .def("add", &Checker::add, py::arg("source"))
        .def("infer", &Checker::infer, py::arg("term"))
        .def("whnf", &Checker::whnf, py::arg("term"), py::arg("fuel") = kDefaultFuel)
        .def("nf", &Checker::nf, py::arg("term"), py::arg("fuel") = kDefaultFuel)
        .def("def_eq", &Checker::def_eq, py::arg("a"), py::arg("b"), py::arg("fuel") = kDefaultFuel)
        .def_property_readonly("definitions", &Checker::definitions);
}
