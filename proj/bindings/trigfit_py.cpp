#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "trigfit/analysis.hpp"
#include "trigfit/csv.hpp"
#include "trigfit/signals.hpp"

namespace py = pybind11;

namespace {

trigfit::SignalId signal_from_name(const std::string& name) {
    const auto id = trigfit::parse_signal(name);
    if (!id) throw std::invalid_argument("unknown signal: " + name);
    return *id;
}

trigfit::NoiseSpec noise_spec_from_args(std::optional<double> snr_db,
                                        std::optional<double> sigma, std::uint64_t seed) {
    if (snr_db.has_value() == sigma.has_value())
        throw std::invalid_argument("pass exactly one of snr_db or sigma");
    trigfit::NoiseSpec spec;
    spec.kind = snr_db ? trigfit::NoiseKind::snr_db : trigfit::NoiseKind::sigma;
    spec.value = snr_db ? *snr_db : *sigma;
    spec.seed = seed;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    using namespace trigfit;

    m.doc() = "Trigonometric interpolation on equidistant grids with lasso shrinkage";

    py::class_<EquidistantGrid>(m, "EquidistantGrid",
                                "Nodes -pi + 2*pi*j/N with quadrature weight 2*pi/N")
        .def_readonly("node_count", &EquidistantGrid::node_count)
        .def_readonly("nodes", &EquidistantGrid::nodes)
        .def_readonly("weight", &EquidistantGrid::weight);

    m.def("make_grid", &make_grid, py::arg("node_count"),
          "Equidistant grid of N nodes on [-pi, pi)");

    py::class_<SampleVector>(m, "SampleVector", "Function values on an equidistant grid")
        .def(py::init([](const std::vector<double>& values) {
                 return make_samples(make_grid(values.size()), values);
             }),
             py::arg("values"), "Wrap values sampled on the canonical grid of their length")
        .def_readonly("grid", &SampleVector::grid)
        .def_readonly("values", &SampleVector::values)
        .def_property_readonly("source",
                               [](const SampleVector& s) { return s.provenance.source; })
        .def("__len__", [](const SampleVector& s) { return s.values.size(); });

    m.def("sample_signal",
          [](const std::string& name, std::size_t node_count) {
              return sample_signal(signal_from_name(name), node_count);
          },
          py::arg("signal"), py::arg("node_count"),
          "Built-in signal ('f1', 'f2', 'f3') on the canonical N-node grid");
    m.def("eval_signal",
          [](const std::string& name, double x) { return eval_signal(signal_from_name(name), x); },
          py::arg("signal"), py::arg("x"));

    m.def("trapezoidal",
          [](const SampleVector& samples) { return trapezoidal(samples); },
          py::arg("samples"), "(2*pi/N) * sum of the samples");

    m.def("add_noise",
          [](const SampleVector& samples, std::optional<double> snr_db,
             std::optional<double> sigma, std::uint64_t seed) {
              return add_noise(samples, noise_spec_from_args(snr_db, sigma, seed));
          },
          py::arg("samples"), py::kw_only(), py::arg("snr_db") = std::nullopt,
          py::arg("sigma") = std::nullopt, py::arg("seed") = 0,
          "Deterministic Gaussian contamination (SplitMix64 + Box-Muller)");
    m.def("derive_stream", &derive_stream, py::arg("seed"), py::arg("index"),
          "Collision-free per-index sub-seed of a root seed");

    py::class_<TrigCoefficients>(m, "TrigCoefficients",
                                 "Coefficients in the discretely orthonormal real basis")
        .def_readonly("degree", &TrigCoefficients::degree)
        .def_readonly("node_count", &TrigCoefficients::node_count)
        .def_readonly("a", &TrigCoefficients::a)
        .def_readonly("b", &TrigCoefficients::b)
        .def_readonly("halved_top", &TrigCoefficients::halved_top)
        .def_readonly("even_only", &TrigCoefficients::even_only)
        .def("stored_count", &TrigCoefficients::stored_count);

    py::class_<TrigPolynomial>(m, "TrigPolynomial")
        .def(py::init<TrigCoefficients>(), py::arg("coefficients"))
        .def_property_readonly("degree", &TrigPolynomial::degree)
        .def_property_readonly("node_count", &TrigPolynomial::node_count)
        .def("coefficients", &TrigPolynomial::coefficients,
             py::return_value_policy::reference_internal)
        .def("__call__", &TrigPolynomial::operator(), py::arg("x"))
        .def("eval_dense", &TrigPolynomial::eval_dense, py::arg("grid_size"))
        .def("l2_norm", &TrigPolynomial::l2_norm);

    m.def("subtract", &subtract, py::arg("p"), py::arg("q"));

    m.def("coefficients", &coefficients, py::arg("samples"),
          "Classical interpolation coefficients by direct quadrature sums");
    m.def("even_coefficients", &even_coefficients, py::arg("samples"));
    m.def("interpolate", &interpolate, py::arg("samples"));
    m.def("even_interpolate", &even_interpolate, py::arg("samples"));
    m.def("check_discrete_orthonormality", &check_discrete_orthonormality,
          py::arg("node_count"), py::arg("even_only") = false);

    m.def("soft_threshold",
          py::overload_cast<double, double>(&soft_threshold), py::arg("a"), py::arg("k"),
          "max(0, a-k) + min(0, a+k)");
    m.def("lasso_interpolate",
          [](const SampleVector& samples, double lam) {
              return lasso_interpolate(samples, LassoParams{lam});
          },
          py::arg("samples"), py::arg("lambda"));
    m.def("lasso_even_interpolate",
          [](const SampleVector& samples, double lam) {
              return lasso_even_interpolate(samples, LassoParams{lam});
          },
          py::arg("samples"), py::arg("lambda"));
    m.def("sparsity", py::overload_cast<const TrigPolynomial&>(&sparsity), py::arg("p"),
          "Count of exactly nonzero stored coefficients");
    m.def("lambda_max", &lambda_max, py::arg("samples"));
    m.def("objective",
          [](const TrigPolynomial& p, const SampleVector& samples, double lam) {
              return objective(p, samples, LassoParams{lam});
          },
          py::arg("p"), py::arg("samples"), py::arg("lambda"));
    m.def("oracle_solve",
          [](const SampleVector& samples, double lam, std::size_t max_iter, double tol) {
              return oracle_solve(samples, LassoParams{lam}, max_iter, tol);
          },
          py::arg("samples"), py::arg("lambda"), py::arg("max_iter") = 10000,
          py::arg("tol") = 1e-12,
          "Proximal-gradient minimizer, an independent check on lasso_interpolate");

    m.def("l2_error",
          [](const SampleVector& reference, const TrigPolynomial& p) {
              return l2_error(reference, p);
          },
          py::arg("reference"), py::arg("p"));
    m.def("l2_error",
          [](const std::function<double(double)>& f, const TrigPolynomial& p,
             std::size_t quad_points) { return l2_error(f, p, quad_points); },
          py::arg("f"), py::arg("p"), py::arg("quad_points") = 0);
    m.def("uniform_error",
          [](const SampleVector& reference, const TrigPolynomial& p) {
              return uniform_error(reference, p);
          },
          py::arg("reference"), py::arg("p"));
    m.def("uniform_error",
          [](const std::function<double(double)>& f, const TrigPolynomial& p,
             std::size_t eval_points) { return uniform_error(f, p, eval_points); },
          py::arg("f"), py::arg("p"), py::arg("eval_points") = 0);

    m.def("k_functional", &k_functional, py::arg("coefficients"), py::arg("lambda"));
    m.def("stability_bound", &stability_bound, py::arg("coefficients"), py::arg("lambda"),
          py::arg("sup_f"));
    m.def("best_approx_proxy",
          [](const std::function<double(double)>& f, std::size_t degree,
             std::size_t oversample) {
              const BestApproxProxy proxy = best_approx_proxy(f, degree, oversample);
              return py::make_tuple(proxy.polynomial, proxy.uniform_error);
          },
          py::arg("f"), py::arg("degree"), py::arg("oversample") = 8,
          "(truncated high-resolution interpolant, its uniform error)");

    m.def("write_samples_csv", &write_samples_csv, py::arg("samples"), py::arg("path"));
    m.def("read_samples_csv", &read_samples_csv, py::arg("path"));
    m.def("write_coefficients_csv", &write_coefficients_csv, py::arg("coefficients"),
          py::arg("path"));
    m.def("read_coefficients_csv", &read_coefficients_csv, py::arg("path"));
}
