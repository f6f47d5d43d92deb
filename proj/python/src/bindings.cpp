#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <magnus/bounds.hpp>
#include <magnus/coefficients.hpp>
#include <magnus/magnus_terms.hpp>
#include <magnus/propagator.hpp>
#include <magnus/report_io.hpp>
#include <magnus/run_config.hpp>
#include <magnus/series_analysis.hpp>
#include <magnus/tree.hpp>
#include <magnus/validation.hpp>

#include "cli.hpp"

namespace py = pybind11;
using namespace magnus;

namespace
{

using Dense = Eigen::MatrixXcd;

numeric::Matrix to_matrix(const Dense &m)
{
    if (m.rows() != m.cols() || m.rows() < 1 || m.rows() > numeric::kMaxDimension) {
        throw std::invalid_argument("expected a square matrix of size 1..8");
    }
    return numeric::Matrix(m);
}

numeric::GeneratorFunction make_generator(const std::string &family, const std::vector<Dense> &coefficients,
                                          double omega)
{
    std::vector<numeric::Matrix> c;
    for (const auto &m : coefficients) {
        c.push_back(to_matrix(m));
    }
    auto need = [&](std::size_t k) {
        if (c.size() != k) {
            throw std::invalid_argument("family '" + family + "' takes " + std::to_string(k) + " matrices");
        }
    };
    if (family == "constant") {
        need(1);
        return numeric::GeneratorFunction::constant(c[0]);
    }
    if (family == "affine") {
        need(2);
        return numeric::GeneratorFunction::affine(c[0], c[1]);
    }
    if (family == "sinusoid") {
        need(3);
        return numeric::GeneratorFunction::sinusoid(c[0], c[1], c[2], omega);
    }
    if (family == "polynomial") {
        if (c.empty()) {
            throw std::invalid_argument("polynomial needs at least one matrix");
        }
        return numeric::GeneratorFunction::polynomial(c);
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

std::vector<std::string> strings(const NuTable &t)
{
    std::vector<std::string> out;
    for (std::size_t n = 1; n <= t.n_max(); ++n) {
        out.push_back(t.at(n).str());
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Tree coefficients and truncation bounds for the Magnus expansion";

    py::register_exception<numeric::QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);
    py::register_exception<numeric::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<numeric::ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.attr("XI") = Constants::xi;
    m.attr("DELTA_XI") = Constants::delta_xi;

    m.def(
        "nu",
        [](std::size_t n_max, const std::string &method) {
            const auto parsed = parse_nu_method(method);
            if (!parsed) {
                throw std::invalid_argument("unknown method '" + method + "'");
            }
            return strings(nu_table(*parsed, n_max));
        },
        py::arg("n_max"), py::arg("method") = "recursion");

    m.def(
        "trees",
        [](std::size_t n) {
            std::vector<std::string> out;
            for (const auto &t : enumerate(n).members) {
                out.push_back(serialize(t));
            }
            return out;
        },
        py::arg("n"));
    m.def("alpha", [](const std::string &tree) { return alpha(parse(tree)).str(); }, py::arg("tree"));
    m.def("mu", [](const std::string &tree) { return mu(parse(tree)).str(); }, py::arg("tree"));
    m.def("commutator_expression", [](const std::string &tree) { return to_commutator_expression(parse(tree)); },
          py::arg("tree"));

    m.def("scaled_time", &scaled_time, py::arg("h_max"), py::arg("t"));
    m.def("coefficient_envelope", &coefficient_envelope, py::arg("n"), py::arg("constant") = 8.0);
    m.def("term_bound", &magnus_term_bound, py::arg("n"), py::arg("h_max"), py::arg("t"), py::arg("constant") = 4.0);
    m.def("truncation_bound", &truncation_bound, py::arg("N"), py::arg("h_max"), py::arg("t"),
          py::arg("constant") = 4.0);
    m.def("truncation_bound_tight", &truncation_bound_tight, py::arg("N"), py::arg("h_max"), py::arg("t"),
          py::arg("rel_tol") = 1e-12, py::arg("constant") = 4.0);

    m.def(
        "lhs_integral_series",
        [](std::size_t order) {
            const auto ls = lhs_integral_series(order);
            std::vector<std::string> out;
            for (std::size_t k = 1; k <= ls.series.order(); ++k) {
                out.push_back(ls.series[k].str());
            }
            return std::make_pair(ls.log_coefficient.str(), out);
        },
        py::arg("order"));
    m.def("estimate_beta", py::overload_cast<std::size_t, std::size_t>(&estimate_beta), py::arg("n"),
          py::arg("k_cut") = 60);
    m.def(
        "beta_sweep",
        [](std::size_t n_first, std::size_t n_last, std::size_t k_cut) {
            py::list out;
            for (const auto &r : beta_sweep(n_first, n_last, k_cut)) {
                py::dict d;
                d["n"] = r.n;
                d["k_cut"] = r.k_cut;
                d["beta"] = r.beta;
                d["theta"] = r.theta;
                d["delta"] = r.delta;
                d["k_max"] = r.k_max;
                out.append(d);
            }
            return out;
        },
        py::arg("n_first") = 10, py::arg("n_last") = 24, py::arg("k_cut") = 60);

    m.def(
        "magnus_terms",
        [](const std::string &family, const std::vector<Dense> &coefficients, double t, std::size_t n_max,
           double omega) {
            const auto gen = make_generator(family, coefficients, omega);
            std::vector<Dense> out;
            for (const auto &r : numeric::magnus_terms(n_max, gen, t)) {
                out.emplace_back(r.value);
            }
            return out;
        },
        py::arg("family"), py::arg("coefficients"), py::arg("t"), py::arg("n_max") = 4, py::arg("omega") = 1.0);
    m.def(
        "reference_propagator",
        [](const std::string &family, const std::vector<Dense> &coefficients, double t, double tol, double omega) {
            const auto gen = make_generator(family, coefficients, omega);
            return Dense(numeric::reference_propagator(gen, t, tol).value);
        },
        py::arg("family"), py::arg("coefficients"), py::arg("t"), py::arg("tol") = 1e-11, py::arg("omega") = 1.0);
    m.def(
        "simulate_json",
        [](const std::string &path) {
            const auto config = numeric::load_run_config(path);
            const auto gen = numeric::make_generator(config);
            const double horizon = numeric::resolve_horizon(config, gen);
            const auto report = numeric::validate_bounds(gen, horizon, numeric::make_validation_options(config));
            return to_json(report).dump();
        },
        py::arg("path"));

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
