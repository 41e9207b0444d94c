#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace trigfit {

/// Equidistant nodes x_j = -pi + 2*pi*j/N, j = 0..N-1, on [-pi, pi), with the
/// uniform quadrature weight 2*pi/N. The right endpoint is excluded: by
/// 2*pi periodicity x_N coincides with x_0.
struct EquidistantGrid {
    std::size_t node_count = 0;
    std::vector<double> nodes;
    double weight = 0.0;
};

/// Build the N-node grid, N >= 1. Each node comes from the closed form
/// -pi + 2*pi*j/N, so rounding does not accumulate across j.
EquidistantGrid make_grid(std::size_t node_count);

/// Trapezoidal rule for a periodic integrand sampled on the grid:
/// (2*pi/N) * sum_j values[j]. No endpoint halving is needed because the
/// identified endpoints share one node. Exact for trigonometric polynomials
/// of degree < N.
double trapezoidal(const EquidistantGrid& grid, std::span<const double> values);

}  // namespace trigfit
