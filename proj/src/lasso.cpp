#include "trigfit/lasso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "trigfit/errors.hpp"

namespace trigfit {

double soft_threshold(double a, double k) {
    if (k < 0.0)
        throw std::invalid_argument("soft_threshold: threshold must be nonnegative");
    return std::max(0.0, a - k) + std::min(0.0, a + k);
}

TrigCoefficients soft_threshold(const TrigCoefficients& coeffs, double lambda) {
    TrigCoefficients out = coeffs;
    for (double& v : out.a) v = soft_threshold(v, lambda);
    for (double& v : out.b) v = soft_threshold(v, lambda);
    return out;
}

TrigPolynomial lasso_interpolate(const SampleVector& samples, const LassoParams& params) {
    return TrigPolynomial(soft_threshold(coefficients(samples), params.lambda));
}

TrigPolynomial lasso_even_interpolate(const SampleVector& samples,
                                      const LassoParams& params) {
    return TrigPolynomial(soft_threshold(even_coefficients(samples), params.lambda));
}

std::size_t sparsity(const TrigCoefficients& coeffs) {
    std::size_t zeros = 0;
    for (double v : coeffs.a) zeros += v == 0.0 ? 1 : 0;
    for (double v : coeffs.b) zeros += v == 0.0 ? 1 : 0;
    return coeffs.stored_count() - zeros;
}

std::size_t sparsity(const TrigPolynomial& p) {
    return sparsity(p.coefficients());
}

double lambda_max(const SampleVector& samples) {
    const TrigCoefficients coeffs = coefficients(samples);
    double best = 0.0;
    for (double v : coeffs.a) best = std::max(best, std::abs(v));
    for (double v : coeffs.b) best = std::max(best, std::abs(v));
    return best;
}

double objective(const TrigPolynomial& p, const SampleVector& samples,
                 const LassoParams& params) {
    if (params.lambda < 0.0)
        throw std::invalid_argument("objective: lambda must be nonnegative");
    const std::size_t n_nodes = samples.grid.node_count;
    if (p.node_count() != n_nodes)
        throw IncompatibleLayout("objective: polynomial layout does not match the grid");
    double residual = 0.0;
    for (std::size_t j = 0; j < n_nodes; ++j) {
        const double d = p(samples.grid.nodes[j]) - samples.values[j];
        residual += d * d;
    }
    double penalty = 0.0;
    for (double v : p.coefficients().a) penalty += std::abs(v);
    for (double v : p.coefficients().b) penalty += std::abs(v);
    return 0.5 * samples.grid.weight * residual + params.lambda * penalty;
}

TrigCoefficients oracle_solve(const SampleVector& samples, const LassoParams& params,
                              std::size_t max_iter, double tol) {
    if (params.lambda < 0.0)
        throw std::invalid_argument("oracle_solve: lambda must be nonnegative");
    if (max_iter == 0)
        throw std::invalid_argument("oracle_solve: max_iter must be at least 1");
    if (!(tol > 0.0))
        throw std::invalid_argument("oracle_solve: tol must be positive");

    const std::size_t n_nodes = samples.grid.node_count;
    if (n_nodes == 0 || samples.values.size() != n_nodes)
        throw std::invalid_argument("oracle_solve: samples do not match their grid");

    const std::vector<basis::Mode> modes = basis::modes(n_nodes, false);
    std::vector<std::vector<double>> table(modes.size(), std::vector<double>(n_nodes));
    for (std::size_t k = 0; k < modes.size(); ++k)
        for (std::size_t j = 0; j < n_nodes; ++j)
            table[k][j] = basis::value(modes[k], samples.grid.nodes[j], n_nodes);

    constexpr double step = 0.5;
    const double w = samples.grid.weight;
    std::vector<double> gamma(modes.size(), 0.0);
    std::vector<double> residual(n_nodes);
    std::vector<double> next(modes.size());

    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        for (std::size_t j = 0; j < n_nodes; ++j) {
            double p = 0.0;
            for (std::size_t k = 0; k < modes.size(); ++k) p += gamma[k] * table[k][j];
            residual[j] = p - samples.values[j];
        }
        double delta = 0.0;
        for (std::size_t k = 0; k < modes.size(); ++k) {
            double grad = 0.0;
            for (std::size_t j = 0; j < n_nodes; ++j) grad += residual[j] * table[k][j];
            grad *= w;
            next[k] = soft_threshold(gamma[k] - step * grad, step * params.lambda);
            delta = std::max(delta, std::abs(next[k] - gamma[k]));
        }
        gamma.swap(next);
        if (delta < tol) {
            TrigCoefficients out = TrigCoefficients::zeros(n_nodes, false);
            for (std::size_t k = 0; k < modes.size(); ++k) {
                if (modes[k].kind == basis::Kind::cosine)
                    out.a[modes[k].index] = gamma[k];
                else
                    out.b[modes[k].index - 1] = gamma[k];
            }
            return out;
        }
    }

    TrigCoefficients last = TrigCoefficients::zeros(n_nodes, false);
    for (std::size_t k = 0; k < modes.size(); ++k) {
        if (modes[k].kind == basis::Kind::cosine)
            last.a[modes[k].index] = gamma[k];
        else
            last.b[modes[k].index - 1] = gamma[k];
    }
    throw ConvergenceFailure("oracle_solve: no convergence within the iteration budget",
                             std::move(last));
}

}  // namespace trigfit
