#include "trigfit/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "trigfit/samples.hpp"

namespace trigfit {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next() {
    state_ += kGoldenGamma;
    return mix64(state_);
}

double SplitMix64::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double GaussianSampler::next() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = 1.0 - rng_.next_unit();  // (0, 1], keeps the log finite
    const double u2 = rng_.next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(t);
    has_cached_ = true;
    return r * std::cos(t);
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + kGoldenGamma * (index + 1));
}

double noise_sigma(const SampleVector& samples, const NoiseSpec& spec) {
    if (spec.kind == NoiseKind::sigma) {
        if (spec.value < 0.0)
            throw std::invalid_argument("noise_sigma: sigma must be nonnegative");
        return spec.value;
    }
    if (samples.values.empty())
        throw std::invalid_argument("noise_sigma: empty samples");
    double power = 0.0;
    for (double v : samples.values) power += v * v;
    power /= static_cast<double>(samples.values.size());
    if (power == 0.0)
        throw std::invalid_argument("noise_sigma: snr_db is undefined for all-zero samples");
    return std::sqrt(power / std::pow(10.0, spec.value / 10.0));
}

SampleVector add_noise(const SampleVector& samples, const NoiseSpec& spec) {
    if (samples.values.size() != samples.grid.node_count)
        throw std::invalid_argument("add_noise: value count does not match the grid");
    const double sigma = noise_sigma(samples, spec);
    SampleVector out = samples;
    GaussianSampler gauss(spec.seed);
    for (double& v : out.values) v += sigma * gauss.next();
    out.provenance.noise = spec;
    return out;
}

}  // namespace trigfit
