#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trigfit/errors.hpp"
#include "trigfit/experiments.hpp"

namespace {

struct CliOptions {
    std::string signal;
    std::string input;
    std::size_t n = 0;
    std::string n_range;
    double lambda = 0.0;
    std::vector<double> lambda_grid;
    double snr_db = 0.0;
    double sigma = 0.0;
    std::uint64_t seed = 0;
    std::size_t repeats = 1;
    std::string out_dir = ".";
    bool plot = false;
    bool even_only = false;
};

std::vector<std::size_t> expand_range(const std::string& text) {
    std::size_t parts[3] = {0, 0, 1};
    std::size_t count = 0;
    std::size_t begin = 0;
    while (begin <= text.size() && count < 3) {
        std::size_t end = text.find(':', begin);
        if (end == std::string::npos) end = text.size();
        const auto [ptr, ec] =
            std::from_chars(text.data() + begin, text.data() + end, parts[count]);
        if (ec != std::errc() || ptr != text.data() + end)
            throw std::invalid_argument("--n-range expects start:stop[:step], got '" + text +
                                        "'");
        ++count;
        begin = end + 1;
        if (end == text.size()) break;
    }
    if (count < 2 || parts[0] == 0 || parts[2] == 0 || parts[1] < parts[0])
        throw std::invalid_argument("--n-range expects start:stop[:step] with start >= 1, "
                                    "stop >= start, step >= 1");
    std::vector<std::size_t> values;
    for (std::size_t n = parts[0]; n <= parts[1]; n += parts[2]) values.push_back(n);
    return values;
}

/// One flag per ExperimentSpec field; every subcommand shares the set.
struct FlagSet {
    CLI::Option* signal = nullptr;
    CLI::Option* input = nullptr;
    CLI::Option* n = nullptr;
    CLI::Option* n_range = nullptr;
    CLI::Option* lambda = nullptr;
    CLI::Option* lambda_grid = nullptr;
    CLI::Option* snr_db = nullptr;
    CLI::Option* sigma = nullptr;
};

FlagSet add_flags(CLI::App* cmd, CliOptions& options) {
    FlagSet flags;
    flags.signal = cmd->add_option("--signal", options.signal, "Built-in signal id")
                       ->check(CLI::IsMember({"f1", "f2", "f3"}));
    flags.input = cmd->add_option("--input", options.input, "Samples CSV to fit instead");
    flags.n = cmd->add_option("--n", options.n, "Grid size N");
    flags.n_range =
        cmd->add_option("--n-range", options.n_range, "Grid sizes start:stop[:step]");
    flags.lambda = cmd->add_option("--lambda", options.lambda, "l1 penalty weight");
    flags.lambda_grid = cmd->add_option("--lambda-grid", options.lambda_grid,
                                        "Comma-separated l1 penalty grid")
                            ->delimiter(',');
    flags.snr_db = cmd->add_option("--snr-db", options.snr_db,
                                   "Add noise at this signal-to-noise ratio (dB)");
    flags.sigma =
        cmd->add_option("--sigma", options.sigma, "Add noise with this standard deviation");
    cmd->add_option("--seed", options.seed, "Root seed for all noise streams")
        ->capture_default_str();
    cmd->add_option("--repeats", options.repeats, "Noise draws per grid size")
        ->capture_default_str();
    cmd->add_option("--out", options.out_dir, "Output directory")->capture_default_str();
    cmd->add_flag("--plot", options.plot, "Also write SVG plots");
    cmd->add_flag("--even-only", options.even_only, "Fit in the cosine-only layout");

    flags.signal->excludes(flags.input);
    flags.n->excludes(flags.n_range);
    flags.lambda->excludes(flags.lambda_grid);
    flags.snr_db->excludes(flags.sigma);
    return flags;
}

trigfit::ExperimentSpec build_spec(trigfit::CommandId command, const CliOptions& options,
                                   const FlagSet& flags) {
    trigfit::ExperimentSpec spec;
    spec.command = command;
    if (flags.signal->count()) {
        spec.signal = *trigfit::parse_signal(options.signal);
    } else if (flags.input->count()) {
        spec.signal = trigfit::SignalId::user_csv;
        spec.input_path = options.input;
    } else {
        throw std::invalid_argument("one of --signal or --input is required");
    }
    if (flags.n->count()) spec.n_values = {options.n};
    if (flags.n_range->count()) spec.n_values = expand_range(options.n_range);
    if (flags.lambda->count()) spec.lambdas = {options.lambda};
    if (flags.lambda_grid->count()) spec.lambdas = options.lambda_grid;
    if (flags.snr_db->count())
        spec.noise = trigfit::NoiseSpec{trigfit::NoiseKind::snr_db, options.snr_db, 0};
    if (flags.sigma->count())
        spec.noise = trigfit::NoiseSpec{trigfit::NoiseKind::sigma, options.sigma, 0};
    spec.seed = options.seed;
    spec.repeats = options.repeats;
    spec.out_dir = options.out_dir;
    spec.plot = options.plot;
    spec.even_only = options.even_only;
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trigonometric interpolation with lasso shrinkage: reconstruction and "
                 "sweep experiments writing CSV (and optional SVG) artifacts"};
    app.require_subcommand(1);

    CliOptions options;
    CLI::App* recover =
        app.add_subcommand("recover", "Fit one sample set and dump dense reconstructions");
    CLI::App* sparsity = app.add_subcommand(
        "sparsity-sweep", "Nonzero-coefficient counts across grid sizes");
    CLI::App* errors = app.add_subcommand(
        "error-sweep", "L2/uniform errors across grid sizes under noise");
    CLI::App* lambdas = app.add_subcommand(
        "lambda-sweep", "Sparsity and errors across an l1 penalty grid");
    const FlagSet recover_flags = add_flags(recover, options);
    const FlagSet sparsity_flags = add_flags(sparsity, options);
    const FlagSet error_flags = add_flags(errors, options);
    const FlagSet lambda_flags = add_flags(lambdas, options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        trigfit::ExperimentSpec spec;
        if (recover->parsed())
            spec = build_spec(trigfit::CommandId::recover, options, recover_flags);
        else if (sparsity->parsed())
            spec = build_spec(trigfit::CommandId::sparsity_sweep, options, sparsity_flags);
        else if (errors->parsed())
            spec = build_spec(trigfit::CommandId::error_sweep, options, error_flags);
        else
            spec = build_spec(trigfit::CommandId::lambda_sweep, options, lambda_flags);

        for (const std::filesystem::path& path : trigfit::run_command(spec))
            std::cout << "wrote " << path.string() << "\n";
        return 0;
    } catch (const trigfit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const trigfit::GridMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const trigfit::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
