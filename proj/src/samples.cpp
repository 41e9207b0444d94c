#include "trigfit/samples.hpp"

#include <stdexcept>
#include <utility>

namespace trigfit {

SampleVector make_samples(EquidistantGrid grid, std::vector<double> values,
                          Provenance provenance) {
    if (values.size() != grid.node_count)
        throw std::invalid_argument("make_samples: value count does not match the grid");
    return SampleVector{std::move(grid), std::move(values), std::move(provenance)};
}

}  // namespace trigfit
