#include "trigfit/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trigfit {

namespace {

std::size_t quad_point_count(const TrigPolynomial& p, std::size_t requested) {
    const std::size_t points = requested == 0 ? 10 * p.node_count() : requested;
    if (points < 2 * p.degree() + 2)
        throw std::invalid_argument(
            "error norm: quadrature grid must have at least 2*degree + 2 points");
    return points;
}

}  // namespace

double l2_error(const std::function<double(double)>& f, const TrigPolynomial& p,
                std::size_t quad_points) {
    const EquidistantGrid grid = make_grid(quad_point_count(p, quad_points));
    double acc = 0.0;
    for (double x : grid.nodes) {
        const double d = f(x) - p(x);
        acc += d * d;
    }
    return std::sqrt(grid.weight * acc);
}

double l2_error(const SampleVector& reference, const TrigPolynomial& p) {
    quad_point_count(p, reference.grid.node_count);
    double acc = 0.0;
    for (std::size_t j = 0; j < reference.grid.node_count; ++j) {
        const double d = reference.values[j] - p(reference.grid.nodes[j]);
        acc += d * d;
    }
    return std::sqrt(reference.grid.weight * acc);
}

double uniform_error(const std::function<double(double)>& f, const TrigPolynomial& p,
                     std::size_t eval_points) {
    const std::size_t points = eval_points == 0 ? 10 * p.node_count() : eval_points;
    const EquidistantGrid grid = make_grid(points);
    double worst = 0.0;
    for (double x : grid.nodes) worst = std::max(worst, std::abs(f(x) - p(x)));
    return worst;
}

double uniform_error(const SampleVector& reference, const TrigPolynomial& p) {
    double worst = 0.0;
    for (std::size_t j = 0; j < reference.grid.node_count; ++j)
        worst = std::max(worst,
                         std::abs(reference.values[j] - p(reference.grid.nodes[j])));
    return worst;
}

double k_functional(const TrigCoefficients& coeffs, double lambda) {
    if (lambda < 0.0)
        throw std::invalid_argument("k_functional: lambda must be nonnegative");
    double acc = 0.0;
    const auto term = [lambda](double c) {
        const double s = soft_threshold(c, lambda);
        return s * c - s * s;
    };
    for (double c : coeffs.a) acc += term(c);
    for (double c : coeffs.b) acc += term(c);
    return acc;
}

double stability_bound(const TrigCoefficients& coeffs, double lambda, double sup_f) {
    const double radicand =
        2.0 * std::numbers::pi * sup_f * sup_f - 2.0 * k_functional(coeffs, lambda);
    if (radicand < 0.0)
        throw std::domain_error(
            "stability_bound: negative radicand, sup_f underestimates the supremum");
    return std::sqrt(radicand);
}

BestApproxProxy best_approx_proxy(const std::function<double(double)>& f,
                                  std::size_t degree, std::size_t oversample) {
    if (oversample == 0)
        throw std::invalid_argument("best_approx_proxy: oversample must be at least 1");
    std::size_t fine = oversample * (2 * degree + 1);
    if (fine % 2 == 0) ++fine;

    const EquidistantGrid grid = make_grid(fine);
    std::vector<double> values(fine);
    for (std::size_t j = 0; j < fine; ++j) values[j] = f(grid.nodes[j]);
    const TrigCoefficients full = coefficients(make_samples(grid, std::move(values)));

    TrigCoefficients truncated = TrigCoefficients::zeros(2 * degree + 1, false);
    for (std::size_t l = 0; l <= degree; ++l) truncated.a[l] = full.a[l];
    for (std::size_t l = 1; l <= degree; ++l) truncated.b[l - 1] = full.b[l - 1];

    BestApproxProxy proxy;
    proxy.polynomial = TrigPolynomial(std::move(truncated));
    proxy.uniform_error = uniform_error(f, proxy.polynomial, 10 * fine);
    return proxy;
}

}  // namespace trigfit
