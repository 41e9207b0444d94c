#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "trigfit/noise.hpp"
#include "trigfit/signals.hpp"

namespace trigfit {

enum class CommandId { recover, sparsity_sweep, error_sweep, lambda_sweep };

/// Everything a command run depends on. Reruns with an identical spec write
/// byte-identical files.
struct ExperimentSpec {
    CommandId command = CommandId::recover;
    SignalId signal = SignalId::user_csv;   ///< user_csv means input_path is used
    std::filesystem::path input_path;

    std::vector<std::size_t> n_values;      ///< expanded N list, ascending
    std::vector<double> lambdas;            ///< single value or grid, ascending
    std::optional<NoiseSpec> noise;         ///< kind/value only; per-draw seeds are derived
    std::uint64_t seed = 0;                 ///< root seed for all derived noise streams
    std::size_t repeats = 1;
    std::filesystem::path out_dir = ".";
    bool plot = false;
    bool even_only = false;                 ///< fit in the cosine-only layout
};

/// Noise seed for the (n_index, repeat) task of a spec:
/// derive_stream(spec.seed, n_index * spec.repeats + repeat). All lambdas of
/// one task share the draw, so the lambda comparison sees identical noise.
std::uint64_t task_seed(const ExperimentSpec& spec, std::size_t n_index, std::size_t repeat);

/// Files written by a command run, in write order.
using CommandOutputs = std::vector<std::filesystem::path>;

/// Single-N reconstruction dump: dense-grid CSV of the clean signal and the
/// classical and lasso fits of the (optionally noisy) samples, coefficient
/// CSVs for both fits, the sampled nodes, and an optional SVG overlay.
/// Requires exactly one N and one lambda. With an input file the clean
/// column is unavailable and the dense CSV carries (x, classical, lasso).
CommandOutputs run_recover(const ExperimentSpec& spec);

/// Per-N nonzero-coefficient counts of classical vs lasso fits in both the
/// full and even-only layouts, for clean samples and (when a noise spec is
/// present) noisy ones. Requires an odd-N list, a single lambda, and a
/// built-in signal.
CommandOutputs run_sparsity_sweep(const ExperimentSpec& spec);

/// Per-(N, lambda, repeat) L2 and uniform errors of classical vs lasso fits
/// of noisy samples, plus a second CSV of per-(N, lambda) means over the
/// repeats. Requires an odd-N list, a noise spec, and a built-in signal.
CommandOutputs run_error_sweep(const ExperimentSpec& spec);

/// Fixed N, per-lambda rows of sparsity, L2/uniform errors, K functional,
/// and the lambda_max reference. Requires exactly one N and a nonempty
/// lambda grid.
CommandOutputs run_lambda_sweep(const ExperimentSpec& spec);

/// Dispatch on spec.command.
CommandOutputs run_command(const ExperimentSpec& spec);

}  // namespace trigfit
