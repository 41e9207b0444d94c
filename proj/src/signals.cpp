#include "trigfit/signals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trigfit {

namespace {

/// v reduced into [0, period) with the floor convention (negative v wraps up).
double floor_mod(double v, double period) {
    double r = std::fmod(v, period);
    if (r < 0.0) r += period;
    return r;
}

}  // namespace

double eval_signal(SignalId id, double x) {
    constexpr double pi = std::numbers::pi;
    switch (id) {
        case SignalId::f1:
            return std::exp(std::sin(x));
        case SignalId::f2:
            return std::cos(50.0 * x + 4.0 * std::sin(5.0 * x));
        case SignalId::f3:
            return (4.0 / pi) * std::abs(floor_mod(x - pi / 2.0, 2.0 * pi) - pi) - 2.0;
        case SignalId::user_csv:
            break;
    }
    throw std::invalid_argument("eval_signal: user_csv has no closed form");
}

SampleVector sample_signal(SignalId id, std::size_t node_count) {
    EquidistantGrid grid = make_grid(node_count);
    std::vector<double> values(node_count);
    for (std::size_t j = 0; j < node_count; ++j) values[j] = eval_signal(id, grid.nodes[j]);
    return make_samples(std::move(grid), std::move(values), Provenance{signal_name(id), {}});
}

std::string signal_name(SignalId id) {
    switch (id) {
        case SignalId::f1: return "f1";
        case SignalId::f2: return "f2";
        case SignalId::f3: return "f3";
        case SignalId::user_csv: return "user_csv";
    }
    return "unknown";
}

std::optional<SignalId> parse_signal(std::string_view name) {
    if (name == "f1") return SignalId::f1;
    if (name == "f2") return SignalId::f2;
    if (name == "f3") return SignalId::f3;
    return std::nullopt;
}

}  // namespace trigfit
