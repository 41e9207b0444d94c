#include "trigfit/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>

#include "trigfit/analysis.hpp"
#include "trigfit/csv.hpp"
#include "trigfit/errors.hpp"
#include "trigfit/svg_plot.hpp"

namespace trigfit {

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

std::string command_name(CommandId id) {
    switch (id) {
        case CommandId::recover: return "recover";
        case CommandId::sparsity_sweep: return "sparsity-sweep";
        case CommandId::error_sweep: return "error-sweep";
        case CommandId::lambda_sweep: return "lambda-sweep";
    }
    return "unknown";
}

std::string join_n(const std::vector<std::size_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

std::string join_lambda(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += format_double(values[i]);
    }
    return out;
}

/// Shared '#' metadata block: the full spec, the root seed, and how per-task
/// seeds derive from it, so a rerun can be reproduced from the file alone.
void write_metadata(std::ofstream& file, const ExperimentSpec& spec,
                    const std::vector<std::string>& extra_lines,
                    const std::string& columns) {
    file << "# trigfit " << command_name(spec.command) << "\n";
    if (spec.signal == SignalId::user_csv)
        file << "# input: " << spec.input_path.string() << "\n";
    else
        file << "# signal: " << signal_name(spec.signal) << "\n";
    file << "# n: " << join_n(spec.n_values) << "\n";
    file << "# lambda: " << join_lambda(spec.lambdas) << "\n";
    if (spec.noise)
        file << "# noise: " << (spec.noise->kind == NoiseKind::snr_db ? "snr_db" : "sigma")
             << " " << format_double(spec.noise->value) << "\n";
    file << "# seed: " << spec.seed << "\n";
    file << "# repeats: " << spec.repeats << "\n";
    file << "# even_only: " << (spec.even_only ? 1 : 0) << "\n";
    if (spec.noise)
        file << "# seed_derivation: derive_stream(seed, n_index * repeats + repeat)\n";
    for (const std::string& line : extra_lines) file << "# " << line << "\n";
    file << "# columns: " << columns << "\n";
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open for writing: " + path.string());
    return file;
}

void finish_output(std::ofstream& file, const std::filesystem::path& path) {
    file.flush();
    if (!file) throw IoError("write failed: " + path.string());
}

TrigCoefficients fit_coefficients(const SampleVector& samples, bool even_only) {
    return even_only ? even_coefficients(samples) : coefficients(samples);
}

double max_abs_coefficient(const TrigCoefficients& coeffs) {
    double best = 0.0;
    for (double v : coeffs.a) best = std::max(best, std::abs(v));
    for (double v : coeffs.b) best = std::max(best, std::abs(v));
    return best;
}

/// Discrete counterparts of the error norms for file-based references: the
/// continuous signal behind an input CSV is unknown, so errors are measured
/// against the samples at their own nodes.
double node_residual_l2(const SampleVector& samples, const TrigPolynomial& p) {
    double acc = 0.0;
    for (std::size_t j = 0; j < samples.grid.node_count; ++j) {
        const double d = p(samples.grid.nodes[j]) - samples.values[j];
        acc += d * d;
    }
    return std::sqrt(samples.grid.weight * acc);
}

double node_residual_max(const SampleVector& samples, const TrigPolynomial& p) {
    double worst = 0.0;
    for (std::size_t j = 0; j < samples.grid.node_count; ++j)
        worst = std::max(worst, std::abs(p(samples.grid.nodes[j]) - samples.values[j]));
    return worst;
}

/// Numeric table read back from a CSV this module wrote; plots are built
/// from these values only, never from numbers kept in memory.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        throw std::invalid_argument("table column not found: " + name);
    }

    std::vector<double> values(const std::string& name) const {
        const std::size_t c = column(name);
        std::vector<double> out;
        out.reserve(rows.size());
        for (const auto& row : rows) out.push_back(row[c]);
        return out;
    }
};

Table read_table(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open for reading: " + path.string());
    Table table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string_view view(line);
            if (view.starts_with("# columns: ")) {
                std::stringstream names(std::string(view.substr(11)));
                std::string name;
                while (std::getline(names, name, ',')) table.columns.push_back(name);
            }
            continue;
        }
        std::vector<double> row;
        std::size_t begin = 0;
        while (begin <= line.size()) {
            std::size_t end = line.find(',', begin);
            if (end == std::string::npos) end = line.size();
            double value = 0.0;
            const auto [ptr, ec] =
                std::from_chars(line.data() + begin, line.data() + end, value);
            if (ec != std::errc() || ptr != line.data() + end)
                throw ParseError("malformed numeric field", line_no);
            row.push_back(value);
            begin = end + 1;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

SampleVector load_base_samples(const ExperimentSpec& spec) {
    if (spec.signal == SignalId::user_csv) {
        require(!spec.input_path.empty(), "an input CSV path is required without --signal");
        SampleVector samples = read_samples_csv(spec.input_path);
        require(spec.n_values.empty() || spec.n_values == std::vector<std::size_t>{
                                             samples.grid.node_count},
                "explicit n disagrees with the input file's node count");
        return samples;
    }
    require(spec.n_values.size() == 1, "this command takes exactly one n");
    return sample_signal(spec.signal, spec.n_values[0]);
}

void require_odd(const std::vector<std::size_t>& n_values) {
    for (std::size_t n : n_values)
        require(n % 2 == 1, "this sweep requires odd n values");
}

}  // namespace

std::uint64_t task_seed(const ExperimentSpec& spec, std::size_t n_index, std::size_t repeat) {
    return derive_stream(spec.seed,
                         static_cast<std::uint64_t>(n_index) * spec.repeats + repeat);
}

CommandOutputs run_recover(const ExperimentSpec& spec) {
    require(spec.lambdas.size() == 1, "recover takes exactly one lambda");
    require(spec.lambdas[0] >= 0.0, "lambda must be nonnegative");
    require(spec.repeats == 1, "recover takes repeats = 1");

    SampleVector clean = load_base_samples(spec);
    const std::size_t n_nodes = clean.grid.node_count;
    const double lambda = spec.lambdas[0];

    SampleVector data = clean;
    if (spec.noise) {
        NoiseSpec draw = *spec.noise;
        draw.seed = derive_stream(spec.seed, 0);
        data = add_noise(clean, draw);
    }

    const TrigCoefficients classical = fit_coefficients(data, spec.even_only);
    const TrigCoefficients lasso = soft_threshold(classical, lambda);
    const TrigPolynomial p_classical{classical};
    const TrigPolynomial p_lasso{lasso};

    std::vector<std::string> notes;
    if (lambda >= max_abs_coefficient(classical))
        notes.push_back("warning: lambda >= lambda_max, lasso output is the zero polynomial");
    const bool has_reference = spec.signal != SignalId::user_csv;
    if (!has_reference)
        notes.push_back("reference: input samples only; no clean column");

    std::filesystem::create_directories(spec.out_dir);
    CommandOutputs outputs;

    const std::filesystem::path recover_path = spec.out_dir / "recover.csv";
    {
        std::ofstream file = open_output(recover_path);
        ExperimentSpec echo = spec;
        echo.n_values = {n_nodes};
        write_metadata(file, echo, notes,
                       has_reference ? "x,f_clean,classical,lasso" : "x,classical,lasso");
        const EquidistantGrid dense = make_grid(10 * n_nodes);
        for (double x : dense.nodes) {
            file << format_double(x);
            if (has_reference) file << "," << format_double(eval_signal(spec.signal, x));
            file << "," << format_double(p_classical(x)) << "," << format_double(p_lasso(x))
                 << "\n";
        }
        finish_output(file, recover_path);
    }
    outputs.push_back(recover_path);

    const std::filesystem::path samples_path = spec.out_dir / "samples.csv";
    write_samples_csv(data, samples_path);
    outputs.push_back(samples_path);

    const std::filesystem::path classical_path = spec.out_dir / "coefficients_classical.csv";
    write_coefficients_csv(classical, classical_path);
    outputs.push_back(classical_path);

    const std::filesystem::path lasso_path = spec.out_dir / "coefficients_lasso.csv";
    write_coefficients_csv(lasso, lasso_path);
    outputs.push_back(lasso_path);

    if (spec.plot) {
        const Table table = read_table(recover_path);
        std::vector<PlotSeries> series;
        const std::vector<double> xs = table.values("x");
        for (const std::string& name : table.columns)
            if (name != "x") series.push_back({name, xs, table.values(name)});
        PlotOptions options;
        options.title = "recover: " +
                        (has_reference ? signal_name(spec.signal)
                                       : spec.input_path.filename().string()) +
                        ", n=" + std::to_string(n_nodes) + ", lambda=" + format_double(lambda);
        options.x_label = "x";
        options.y_label = "value";
        const std::filesystem::path plot_path = spec.out_dir / "recover.svg";
        write_svg_plot(plot_path, series, options);
        outputs.push_back(plot_path);
    }
    return outputs;
}

CommandOutputs run_sparsity_sweep(const ExperimentSpec& spec) {
    require(spec.signal != SignalId::user_csv, "sparsity-sweep requires a built-in signal");
    require(!spec.n_values.empty(), "sparsity-sweep requires at least one n");
    require_odd(spec.n_values);
    require(spec.lambdas.size() == 1, "sparsity-sweep takes exactly one lambda");
    require(spec.lambdas[0] >= 0.0, "lambda must be nonnegative");
    require(spec.repeats >= 1, "repeats must be at least 1");

    const double lambda = spec.lambdas[0];
    const bool noisy = spec.noise.has_value();
    std::string columns =
        "n,lambda,repeat,seed,classical_full,lasso_full,classical_even,lasso_even";
    if (noisy)
        columns +=
            ",classical_full_noisy,lasso_full_noisy,classical_even_noisy,lasso_even_noisy";

    std::filesystem::create_directories(spec.out_dir);
    const std::filesystem::path sparsity_path = spec.out_dir / "sparsity.csv";
    std::ofstream file = open_output(sparsity_path);
    write_metadata(file, spec, {}, columns);

    for (std::size_t ni = 0; ni < spec.n_values.size(); ++ni) {
        const std::size_t n = spec.n_values[ni];
        const SampleVector clean = sample_signal(spec.signal, n);
        const TrigCoefficients clean_full = coefficients(clean);
        const TrigCoefficients clean_even = even_coefficients(clean);
        for (std::size_t repeat = 0; repeat < spec.repeats; ++repeat) {
            const std::uint64_t seed = noisy ? task_seed(spec, ni, repeat) : 0;
            file << n << "," << format_double(lambda) << "," << repeat << "," << seed << ","
                 << sparsity(clean_full) << "," << sparsity(soft_threshold(clean_full, lambda))
                 << "," << sparsity(clean_even) << ","
                 << sparsity(soft_threshold(clean_even, lambda));
            if (noisy) {
                NoiseSpec draw = *spec.noise;
                draw.seed = seed;
                const SampleVector contaminated = add_noise(clean, draw);
                const TrigCoefficients noisy_full = coefficients(contaminated);
                const TrigCoefficients noisy_even = even_coefficients(contaminated);
                file << "," << sparsity(noisy_full) << ","
                     << sparsity(soft_threshold(noisy_full, lambda)) << ","
                     << sparsity(noisy_even) << ","
                     << sparsity(soft_threshold(noisy_even, lambda));
            }
            file << "\n";
        }
    }
    finish_output(file, sparsity_path);

    CommandOutputs outputs{sparsity_path};
    if (spec.plot) {
        const Table table = read_table(sparsity_path);
        const std::vector<double> ns = table.values("n");
        std::vector<PlotSeries> series;
        const char* suffix = noisy ? "_noisy" : "";
        for (const char* base : {"classical_full", "lasso_full", "classical_even", "lasso_even"})
            series.push_back({base + std::string(suffix), ns,
                              table.values(base + std::string(suffix))});
        PlotOptions options;
        options.title = "sparsity sweep: " + signal_name(spec.signal) +
                        ", lambda=" + format_double(lambda);
        options.x_label = "n";
        options.y_label = "nonzero coefficients";
        const std::filesystem::path plot_path = spec.out_dir / "sparsity.svg";
        write_svg_plot(plot_path, series, options);
        outputs.push_back(plot_path);
    }
    return outputs;
}

CommandOutputs run_error_sweep(const ExperimentSpec& spec) {
    require(spec.signal != SignalId::user_csv, "error-sweep requires a built-in signal");
    require(!spec.n_values.empty(), "error-sweep requires at least one n");
    require_odd(spec.n_values);
    require(spec.noise.has_value(), "error-sweep requires a noise spec");
    require(!spec.lambdas.empty(), "error-sweep requires at least one lambda");
    for (double lambda : spec.lambdas) require(lambda >= 0.0, "lambda must be nonnegative");
    require(spec.repeats >= 1, "repeats must be at least 1");

    const auto reference = [&spec](double x) { return eval_signal(spec.signal, x); };

    struct Row {
        std::size_t n_index, lambda_index, repeat;
        std::uint64_t seed;
        std::size_t sparsity_classical, sparsity_lasso;
        double l2_classical, l2_lasso, uniform_classical, uniform_lasso;
    };
    std::vector<Row> rows;
    rows.reserve(spec.n_values.size() * spec.lambdas.size() * spec.repeats);

    for (std::size_t ni = 0; ni < spec.n_values.size(); ++ni) {
        const SampleVector clean = sample_signal(spec.signal, spec.n_values[ni]);
        for (std::size_t repeat = 0; repeat < spec.repeats; ++repeat) {
            NoiseSpec draw = *spec.noise;
            draw.seed = task_seed(spec, ni, repeat);
            const SampleVector noisy = add_noise(clean, draw);
            const TrigCoefficients classical = fit_coefficients(noisy, spec.even_only);
            const TrigPolynomial p_classical{classical};
            const double l2_c = l2_error(reference, p_classical);
            const double uniform_c = uniform_error(reference, p_classical);
            const std::size_t sparsity_c = sparsity(classical);
            for (std::size_t li = 0; li < spec.lambdas.size(); ++li) {
                const TrigPolynomial p_lasso{soft_threshold(classical, spec.lambdas[li])};
                rows.push_back({ni, li, repeat, draw.seed, sparsity_c, sparsity(p_lasso),
                                l2_c, l2_error(reference, p_lasso), uniform_c,
                                uniform_error(reference, p_lasso)});
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& lhs, const Row& rhs) {
        return std::tie(lhs.n_index, lhs.lambda_index, lhs.repeat) <
               std::tie(rhs.n_index, rhs.lambda_index, rhs.repeat);
    });

    std::filesystem::create_directories(spec.out_dir);
    CommandOutputs outputs;

    const std::filesystem::path errors_path = spec.out_dir / "errors.csv";
    {
        std::ofstream file = open_output(errors_path);
        write_metadata(file, spec, {},
                       "n,lambda,repeat,seed,sparsity_classical,sparsity_lasso,"
                       "l2_classical,l2_lasso,uniform_classical,uniform_lasso");
        for (const Row& row : rows)
            file << spec.n_values[row.n_index] << ","
                 << format_double(spec.lambdas[row.lambda_index]) << "," << row.repeat << ","
                 << row.seed << "," << row.sparsity_classical << "," << row.sparsity_lasso
                 << "," << format_double(row.l2_classical) << ","
                 << format_double(row.l2_lasso) << "," << format_double(row.uniform_classical)
                 << "," << format_double(row.uniform_lasso) << "\n";
        finish_output(file, errors_path);
    }
    outputs.push_back(errors_path);

    const std::filesystem::path means_path = spec.out_dir / "errors_mean.csv";
    {
        std::ofstream file = open_output(means_path);
        write_metadata(file, spec, {},
                       "n,lambda,repeats,l2_classical,l2_lasso,"
                       "uniform_classical,uniform_lasso");
        const double count = static_cast<double>(spec.repeats);
        for (std::size_t ni = 0; ni < spec.n_values.size(); ++ni) {
            for (std::size_t li = 0; li < spec.lambdas.size(); ++li) {
                double l2_c = 0.0, l2_l = 0.0, uniform_c = 0.0, uniform_l = 0.0;
                for (const Row& row : rows) {
                    if (row.n_index != ni || row.lambda_index != li) continue;
                    l2_c += row.l2_classical;
                    l2_l += row.l2_lasso;
                    uniform_c += row.uniform_classical;
                    uniform_l += row.uniform_lasso;
                }
                file << spec.n_values[ni] << "," << format_double(spec.lambdas[li]) << ","
                     << spec.repeats << "," << format_double(l2_c / count) << ","
                     << format_double(l2_l / count) << "," << format_double(uniform_c / count)
                     << "," << format_double(uniform_l / count) << "\n";
            }
        }
        finish_output(file, means_path);
    }
    outputs.push_back(means_path);

    if (spec.plot) {
        const Table table = read_table(means_path);
        std::vector<PlotSeries> series;
        std::vector<double> ns, classical;
        std::vector<std::vector<double>> lasso(spec.lambdas.size());
        for (const auto& row : table.rows) {
            const double lambda = row[table.column("lambda")];
            const std::size_t li =
                std::find_if(spec.lambdas.begin(), spec.lambdas.end(),
                             [lambda](double v) { return v == lambda; }) -
                spec.lambdas.begin();
            if (li == 0) {
                ns.push_back(row[table.column("n")]);
                classical.push_back(row[table.column("l2_classical")]);
            }
            lasso[li].push_back(row[table.column("l2_lasso")]);
        }
        series.push_back({"classical", ns, classical});
        for (std::size_t li = 0; li < spec.lambdas.size(); ++li)
            series.push_back(
                {"lasso lambda=" + format_double(spec.lambdas[li]), ns, lasso[li]});
        PlotOptions options;
        options.title = "mean L2 error: " + signal_name(spec.signal);
        options.x_label = "n";
        options.y_label = "mean L2 error";
        options.log_y = true;
        const std::filesystem::path plot_path = spec.out_dir / "errors.svg";
        write_svg_plot(plot_path, series, options);
        outputs.push_back(plot_path);
    }
    return outputs;
}

CommandOutputs run_lambda_sweep(const ExperimentSpec& spec) {
    require(!spec.lambdas.empty(), "lambda-sweep requires a lambda grid");
    for (double lambda : spec.lambdas) require(lambda >= 0.0, "lambda must be nonnegative");
    require(spec.repeats == 1, "lambda-sweep takes repeats = 1");

    SampleVector data = load_base_samples(spec);
    const std::size_t n_nodes = data.grid.node_count;
    if (spec.noise) {
        NoiseSpec draw = *spec.noise;
        draw.seed = derive_stream(spec.seed, 0);
        data = add_noise(data, draw);
    }

    const bool has_reference = spec.signal != SignalId::user_csv;
    const auto reference = [&spec](double x) { return eval_signal(spec.signal, x); };

    const TrigCoefficients classical = fit_coefficients(data, spec.even_only);
    const double max_lambda = max_abs_coefficient(classical);

    std::vector<double> lambdas = spec.lambdas;
    std::sort(lambdas.begin(), lambdas.end());

    std::vector<std::string> notes;
    if (!has_reference)
        notes.push_back("reference: input samples (node residual norms)");

    std::filesystem::create_directories(spec.out_dir);
    const std::filesystem::path lambda_path = spec.out_dir / "lambda.csv";
    std::ofstream file = open_output(lambda_path);
    {
        ExperimentSpec echo = spec;
        echo.n_values = {n_nodes};
        echo.lambdas = lambdas;
        write_metadata(file, echo, notes,
                       "lambda,sparsity_classical,sparsity_lasso,l2_classical,l2_lasso,"
                       "uniform_classical,uniform_lasso,k_functional,lambda_max");
    }
    const TrigPolynomial p_classical{classical};
    const double l2_c = has_reference ? l2_error(reference, p_classical)
                                      : node_residual_l2(data, p_classical);
    const double uniform_c = has_reference ? uniform_error(reference, p_classical)
                                           : node_residual_max(data, p_classical);
    for (double lambda : lambdas) {
        const TrigPolynomial p_lasso{soft_threshold(classical, lambda)};
        const double l2_l = has_reference ? l2_error(reference, p_lasso)
                                          : node_residual_l2(data, p_lasso);
        const double uniform_l = has_reference ? uniform_error(reference, p_lasso)
                                               : node_residual_max(data, p_lasso);
        file << format_double(lambda) << "," << sparsity(classical) << ","
             << sparsity(p_lasso) << "," << format_double(l2_c) << ","
             << format_double(l2_l) << "," << format_double(uniform_c) << ","
             << format_double(uniform_l) << ","
             << format_double(k_functional(classical, lambda)) << ","
             << format_double(max_lambda) << "\n";
    }
    finish_output(file, lambda_path);

    CommandOutputs outputs{lambda_path};
    if (spec.plot) {
        const Table table = read_table(lambda_path);
        const std::vector<double> xs = table.values("lambda");
        std::vector<PlotSeries> series{{"l2_classical", xs, table.values("l2_classical")},
                                       {"l2_lasso", xs, table.values("l2_lasso")}};
        PlotOptions options;
        options.title = "lambda sweep, n=" + std::to_string(n_nodes);
        options.x_label = "lambda";
        options.y_label = "L2 error";
        options.log_x = std::all_of(xs.begin(), xs.end(), [](double v) { return v > 0.0; });
        options.log_y = true;
        const std::filesystem::path plot_path = spec.out_dir / "lambda.svg";
        write_svg_plot(plot_path, series, options);
        outputs.push_back(plot_path);
    }
    return outputs;
}

CommandOutputs run_command(const ExperimentSpec& spec) {
    switch (spec.command) {
        case CommandId::recover: return run_recover(spec);
        case CommandId::sparsity_sweep: return run_sparsity_sweep(spec);
        case CommandId::error_sweep: return run_error_sweep(spec);
        case CommandId::lambda_sweep: return run_lambda_sweep(spec);
    }
    throw std::invalid_argument("unknown command");
}

}  // namespace trigfit
