#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigfit/grid.hpp"
#include "trigfit/noise.hpp"

namespace trigfit {

/// Where a sample vector came from: a built-in signal name or an input file
/// path, plus the noise spec when the values were contaminated.
struct Provenance {
    std::string source;
    std::optional<NoiseSpec> noise;
};

/// Function values on an equidistant grid, stored in node order.
struct SampleVector {
    EquidistantGrid grid;
    std::vector<double> values;
    Provenance provenance;
};

/// Bundle values with their grid; throws std::invalid_argument when the
/// lengths disagree.
SampleVector make_samples(EquidistantGrid grid, std::vector<double> values,
                          Provenance provenance = {});

inline double trapezoidal(const SampleVector& samples) {
    return trapezoidal(samples.grid, samples.values);
}

}  // namespace trigfit
