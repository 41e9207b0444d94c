#include "trigfit/grid.hpp"

#include <numbers>
#include <stdexcept>

namespace trigfit {

EquidistantGrid make_grid(std::size_t node_count) {
    if (node_count == 0)
        throw std::invalid_argument("make_grid: node_count must be at least 1");
    EquidistantGrid grid;
    grid.node_count = node_count;
    const auto n = static_cast<double>(node_count);
    grid.weight = 2.0 * std::numbers::pi / n;
    grid.nodes.resize(node_count);
    for (std::size_t j = 0; j < node_count; ++j)
        grid.nodes[j] = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(j) / n;
    return grid;
}

double trapezoidal(const EquidistantGrid& grid, std::span<const double> values) {
    if (grid.node_count == 0)
        throw std::invalid_argument("trapezoidal: empty grid");
    if (values.size() != grid.node_count)
        throw std::invalid_argument("trapezoidal: value count does not match the grid");
    double acc = 0.0;
    for (double v : values) acc += v;
    return grid.weight * acc;
}

}  // namespace trigfit
