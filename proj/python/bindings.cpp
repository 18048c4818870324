#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "orbiroot/cli.hpp"
#include "orbiroot/correspondence.hpp"
#include "orbiroot/errors.hpp"
#include "orbiroot/inertia_rr.hpp"
#include "orbiroot/local_model.hpp"
#include "orbiroot/moduli.hpp"
#include "orbiroot/session.hpp"
#include "orbiroot/verify.hpp"

namespace py = pybind11;
using namespace orbiroot;

// Rational <-> fractions.Fraction; ints and "p/q" strings are accepted on input.
namespace pybind11::detail {

template <>
struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (!src) return false;
        try {
            if (py::isinstance<py::str>(src)) {
                value = parse_rational(src.cast<std::string>());
                return true;
            }
            py::object fraction = py::module_::import("fractions").attr("Fraction");
            if (!py::isinstance<py::int_>(src) && !py::isinstance(src, fraction)) return false;
            py::object f = fraction(src);
            value = Rational(BigInt(py::str(f.attr("numerator")).cast<std::string>()),
                             BigInt(py::str(f.attr("denominator")).cast<std::string>()));
            return true;
        } catch (...) {
            return false;
        }
    }

    static handle cast(const Rational& x, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        py::int_ num(py::str(boost::multiprecision::numerator(x).str()));
        py::int_ den(py::str(boost::multiprecision::denominator(x).str()));
        return fraction(num, den).release();
    }
};

template <>
struct type_caster<BigInt> {
    PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !py::isinstance<py::int_>(src)) return false;
        value = BigInt(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const BigInt& x, return_value_policy, handle) {
        return py::int_(py::str(x.str())).release();
    }
};

}  // namespace pybind11::detail

namespace {

ParBundle par_bundle(const std::vector<ParLine>& lines) { return ParBundle(lines); }
StackBundle stack_bundle(const std::vector<LineObject>& lines) { return StackBundle(lines); }

py::tuple run_cli(const std::vector<std::string>& args) {
    std::vector<std::string> all{"orbiroot"};
    all.insert(all.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : all) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_orbiroot, m) {
    m.doc() = "Parabolic bundles and bundles on root stacks over a marked curve";

    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
    (void)domain;

    py::class_<OrbiConfig>(m, "Config")
        .def(py::init(&OrbiConfig::make), py::arg("genus"), py::arg("num_points"), py::arg("root_index"),
             py::arg("polarization_degree") = 1)
        .def_property_readonly("genus", &OrbiConfig::genus)
        .def_property_readonly("num_points", &OrbiConfig::num_points)
        .def_property_readonly("root_index", &OrbiConfig::root_index)
        .def_property_readonly("point_labels", &OrbiConfig::point_labels)
        .def("__eq__", [](const OrbiConfig& a, const OrbiConfig& b) { return a == b; })
        .def("__repr__", [](const OrbiConfig& c) {
            return "Config(genus=" + std::to_string(c.genus()) + ", num_points=" + std::to_string(c.num_points()) +
                   ", root_index=" + std::to_string(c.root_index()) + ")";
        });

    py::class_<ParLine>(m, "ParLine")
        .def(py::init([](std::int64_t d, std::vector<Rational> w) { return ParLine{d, std::move(w)}; }),
             py::arg("degree"), py::arg("weights"))
        .def_readwrite("degree", &ParLine::degree)
        .def_readwrite("weights", &ParLine::weights)
        .def("__eq__", [](const ParLine& a, const ParLine& b) { return a == b; })
        .def("__repr__", [](const ParLine& l) {
            std::string s = "ParLine(" + std::to_string(l.degree) + ", [";
            for (std::size_t i = 0; i < l.weights.size(); ++i) s += (i ? ", " : "") + to_display_string(l.weights[i]);
            return s + "])";
        });

    py::class_<LineObject>(m, "LineObject")
        .def(py::init([](std::int64_t d, std::vector<int> res) { return LineObject{d, std::move(res)}; }),
             py::arg("degree"), py::arg("residues"))
        .def_readwrite("degree", &LineObject::degree)
        .def_readwrite("residues", &LineObject::residues)
        .def("__eq__", [](const LineObject& a, const LineObject& b) { return a == b; })
        .def("__lt__", [](const LineObject& a, const LineObject& b) { return a < b; })
        .def("__hash__", [](const LineObject& l) {
            std::size_t h = std::hash<std::int64_t>{}(l.degree);
            for (int c : l.residues) h = h * 31 + static_cast<std::size_t>(c);
            return h;
        })
        .def("__repr__", [](const LineObject& l) {
            std::string s = "LineObject(" + std::to_string(l.degree) + ", [";
            for (std::size_t i = 0; i < l.residues.size(); ++i) s += (i ? ", " : "") + std::to_string(l.residues[i]);
            return s + "])";
        });

    // Bundles cross the boundary as lists of lines, sorted canonically.
    m.def("to_stack", [](const OrbiConfig& c, const std::vector<ParLine>& e) {
        return to_stack(c, par_bundle(e)).summands();
    });
    m.def("to_parabolic", [](const OrbiConfig& c, const std::vector<LineObject>& f) {
        return to_parabolic(c, stack_bundle(f)).summands();
    });
    m.def("coend_evaluate", py::overload_cast<const OrbiConfig&, const ParLine&>(&coend_evaluate));
    m.def("filtration_degree", &filtration_degree);
    m.def("deg_par", [](const std::vector<ParLine>& e) { return deg_par(par_bundle(e)); });
    m.def("deg_par_hilbert", [](const OrbiConfig& c, const std::vector<ParLine>& e) {
        return deg_par_hilbert(c, par_bundle(e));
    });
    m.def("deg_stack", [](const OrbiConfig& c, const std::vector<LineObject>& f) {
        return deg_stack(c, stack_bundle(f));
    });
    m.def("tensor_par", [](const OrbiConfig& c, const std::vector<ParLine>& a, const std::vector<ParLine>& b) {
        return tensor_par(c, par_bundle(a), par_bundle(b)).summands();
    });
    m.def("tensor_stack", [](const OrbiConfig& c, const std::vector<LineObject>& a, const std::vector<LineObject>& b) {
        return tensor_stack(c, stack_bundle(a), stack_bundle(b)).summands();
    });
    m.def("dual_par", py::overload_cast<const OrbiConfig&, const ParLine&>(&dual_par));
    m.def("normalize", [](const OrbiConfig& c, std::int64_t d, const std::vector<std::int64_t>& raw) {
        return normalize(c, d, raw);
    });
    m.def("chi_par", [](const OrbiConfig& c, const std::vector<ParLine>& e) { return chi_par(c, par_bundle(e)); });
    m.def(
        "chi_par_three_way",
        [](const OrbiConfig& c, const std::vector<ParLine>& e, double tol) {
            auto routes = chi_par_three_way(c, par_bundle(e), tol);
            py::dict out;
            out["parabolic"] = routes.parabolic;
            out["pushforward"] = routes.pushforward;
            out["inertia"] = routes.inertia;
            return out;
        },
        py::arg("config"), py::arg("bundle"), py::arg("tol") = kDefaultTolerance);
    m.def(
        "chi_inertia",
        [](const OrbiConfig& c, const std::vector<LineObject>& f, double tol) {
            return chi_inertia(c, stack_bundle(f), tol);
        },
        py::arg("config"), py::arg("bundle"), py::arg("tol") = kDefaultTolerance);
    m.def("regular_char", &regular_char);
    m.def("is_semistable", [](const OrbiConfig& c, const std::vector<LineObject>& f) {
        return is_semistable(c, stack_bundle(f));
    });
    m.def("is_finite", [](const OrbiConfig& c, const std::vector<LineObject>& f) {
        return is_finite(c, stack_bundle(f));
    });
    m.def("witness_polynomials", [](const OrbiConfig& c, const std::vector<LineObject>& f, int bound) -> py::object {
        auto w = witness_polynomials(c, stack_bundle(f), bound);
        if (!w) return py::none();
        return py::make_tuple(w->p, w->q);
    });
    m.def("enumerate_finite_lines", &enumerate_finite_lines);
    m.def("decompose_shifts", [](const std::string& module_json) {
        return decompose_shifts(parse_module(nlohmann::json::parse(module_json)));
    });
    m.def("run_cli", &run_cli, "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
    m.def(
        "selftest",
        [](std::size_t samples, std::uint64_t seed) {
            SelftestOptions opt;
            opt.samples = samples;
            opt.seed = seed;
            py::dict out;
            for (const auto& s : run_selftest(opt)) out[py::str(s.name)] = s.passed();
            return out;
        },
        py::arg("samples") = 50, py::arg("seed") = 1);
}
