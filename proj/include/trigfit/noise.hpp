#pragma once

#include <cstdint>

namespace trigfit {

struct SampleVector;

/// How the noise level is specified: a target signal-to-noise ratio in dB,
/// or an explicit standard deviation.
enum class NoiseKind { snr_db, sigma };

struct NoiseSpec {
    NoiseKind kind = NoiseKind::sigma;
    double value = 0.0;  ///< dB for snr_db, standard deviation for sigma.
    std::uint64_t seed = 0;
};

/// Counter-based pseudo-random generator. Output i for seed s is
/// mix(s + (i+1)*0x9e3779b97f4a7c15) where mix is the three-stage
/// xor-shift-multiply finalizer below. The sequence is fully determined by
/// these constants, so noisy experiments reproduce bit-for-bit on any
/// platform (std::normal_distribution and friends carry no such guarantee).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform double in [0, 1): the top 53 bits of next(), scaled by 2^-53.
    double next_unit();

private:
    std::uint64_t state_;
};

/// Standard normal deviates from SplitMix64 uniforms via the Box-Muller
/// transform: with u1 = 1 - next_unit() in (0, 1] and u2 = next_unit(),
/// r = sqrt(-2 ln u1), the pair is (r cos(2 pi u2), r sin(2 pi u2)).
/// Deviates are handed out cosine first, one pair per two uniforms.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

    double next();

private:
    SplitMix64 rng_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// Seed for sub-stream `index` of a root seed:
/// mix(seed + (index+1)*0x9e3779b97f4a7c15). The finalizer is a bijection on
/// 64-bit words, so for a fixed root seed distinct indices always yield
/// distinct stream seeds.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index);

/// Standard deviation add_noise will apply to these samples: spec.value for
/// the sigma kind; sqrt(P / 10^(value/10)) with P = mean square of the clean
/// samples for the snr_db kind.
double noise_sigma(const SampleVector& samples, const NoiseSpec& spec);

/// Add i.i.d. N(0, sigma^2) perturbations to every sample, sigma as in
/// noise_sigma. The result records `spec` in its provenance. Identical
/// samples and spec (seed included) give bit-identical output.
SampleVector add_noise(const SampleVector& samples, const NoiseSpec& spec);

}  // namespace trigfit
