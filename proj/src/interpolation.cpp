#include "trigfit/interpolation.hpp"

#include <cmath>
#include <stdexcept>

namespace trigfit {

namespace {

TrigCoefficients project(const SampleVector& samples, bool even_only) {
    const std::size_t n_nodes = samples.grid.node_count;
    if (n_nodes == 0 || samples.values.size() != n_nodes)
        throw std::invalid_argument("coefficients: samples do not match their grid");
    TrigCoefficients coeffs = TrigCoefficients::zeros(n_nodes, even_only);
    const double w = samples.grid.weight;
    for (const basis::Mode mode : basis::modes(n_nodes, even_only)) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n_nodes; ++j)
            acc += samples.values[j] * basis::value(mode, samples.grid.nodes[j], n_nodes);
        const double coeff = w * acc;
        if (mode.kind == basis::Kind::cosine)
            coeffs.a[mode.index] = coeff;
        else
            coeffs.b[mode.index - 1] = coeff;
    }
    return coeffs;
}

}  // namespace

TrigCoefficients coefficients(const SampleVector& samples) {
    return project(samples, false);
}

TrigCoefficients even_coefficients(const SampleVector& samples) {
    return project(samples, true);
}

TrigPolynomial interpolate(const SampleVector& samples) {
    return TrigPolynomial(coefficients(samples));
}

TrigPolynomial even_interpolate(const SampleVector& samples) {
    return TrigPolynomial(even_coefficients(samples));
}

double check_discrete_orthonormality(std::size_t node_count, bool even_only) {
    const EquidistantGrid grid = make_grid(node_count);
    const std::vector<basis::Mode> modes = basis::modes(node_count, even_only);

    std::vector<std::vector<double>> table(modes.size(),
                                           std::vector<double>(node_count));
    for (std::size_t k = 0; k < modes.size(); ++k)
        for (std::size_t j = 0; j < node_count; ++j)
            table[k][j] = basis::value(modes[k], grid.nodes[j], node_count);

    double worst = 0.0;
    for (std::size_t k = 0; k < modes.size(); ++k) {
        for (std::size_t l = k; l < modes.size(); ++l) {
            double acc = 0.0;
            for (std::size_t j = 0; j < node_count; ++j) acc += table[k][j] * table[l][j];
            const double entry = grid.weight * acc;
            const double expected = k == l ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(entry - expected));
        }
    }
    return worst;
}

}  // namespace trigfit
