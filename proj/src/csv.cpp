#include "trigfit/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trigfit/errors.hpp"

namespace trigfit {

namespace {

constexpr double kGridTolerance = 1e-9;

double parse_field(std::string_view field, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError("malformed numeric field '" + std::string(field) + "'", line_no);
    return value;
}

std::string_view trimmed(std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
}

std::optional<NoiseSpec> parse_noise_metadata(std::string_view noise_line,
                                              std::string_view seed_line) {
    if (noise_line.empty()) return std::nullopt;
    NoiseSpec spec;
    const auto space = noise_line.find(' ');
    if (space == std::string_view::npos) return std::nullopt;
    const std::string_view kind = noise_line.substr(0, space);
    if (kind == "snr_db")
        spec.kind = NoiseKind::snr_db;
    else if (kind == "sigma")
        spec.kind = NoiseKind::sigma;
    else
        return std::nullopt;
    const std::string_view value = trimmed(noise_line.substr(space + 1));
    if (std::from_chars(value.data(), value.data() + value.size(), spec.value).ec !=
        std::errc())
        return std::nullopt;
    if (!seed_line.empty())
        std::from_chars(seed_line.data(), seed_line.data() + seed_line.size(), spec.seed);
    return spec;
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_samples_csv(const SampleVector& samples, const std::filesystem::path& path) {
    if (samples.values.size() != samples.grid.node_count)
        throw std::invalid_argument("write_samples_csv: samples do not match their grid");
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw IoError("cannot open for writing: " + path.string());
    file << "# trigfit samples\n";
    file << "# node_count: " << samples.grid.node_count << "\n";
    if (!samples.provenance.source.empty())
        file << "# source: " << samples.provenance.source << "\n";
    if (samples.provenance.noise) {
        const NoiseSpec& spec = *samples.provenance.noise;
        file << "# noise: " << (spec.kind == NoiseKind::snr_db ? "snr_db" : "sigma") << " "
             << format_double(spec.value) << "\n";
        file << "# seed: " << spec.seed << "\n";
    }
    file << "# columns: x,value\n";
    for (std::size_t j = 0; j < samples.grid.node_count; ++j)
        file << format_double(samples.grid.nodes[j]) << ","
             << format_double(samples.values[j]) << "\n";
    if (!file)
        throw IoError("write failed: " + path.string());
}

SampleVector read_samples_csv(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw IoError("cannot open for reading: " + path.string());

    std::vector<double> xs;
    std::vector<double> values;
    std::string noise_meta;
    std::string seed_meta;
    std::size_t columns = 0;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string_view view(line);
            if (view.starts_with("# noise:"))
                noise_meta = trimmed(view.substr(8));
            else if (view.starts_with("# seed:"))
                seed_meta = trimmed(view.substr(7));
            continue;
        }
        const auto comma = line.find(',');
        const std::size_t row_columns = comma == std::string::npos ? 1 : 2;
        if (row_columns == 2 && line.find(',', comma + 1) != std::string::npos)
            throw ParseError("expected one or two columns", line_no);
        if (columns == 0)
            columns = row_columns;
        else if (columns != row_columns)
            throw ParseError("inconsistent column count", line_no);
        if (columns == 2) {
            xs.push_back(parse_field(trimmed(std::string_view(line).substr(0, comma)), line_no));
            values.push_back(
                parse_field(trimmed(std::string_view(line).substr(comma + 1)), line_no));
        } else {
            values.push_back(parse_field(trimmed(line), line_no));
        }
    }
    if (values.empty())
        throw ParseError("no data rows", line_no == 0 ? 1 : line_no);

    EquidistantGrid grid = make_grid(values.size());
    if (columns == 2) {
        std::size_t worst_row = 0;
        double worst = 0.0;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            const double dev = std::abs(xs[j] - grid.nodes[j]);
            if (dev > worst) {
                worst = dev;
                worst_row = j;
            }
        }
        if (worst > kGridTolerance)
            throw GridMismatch("abscissa at row " + std::to_string(worst_row) +
                                   " is off the equidistant grid by " + format_double(worst),
                               worst_row, worst);
    }

    Provenance provenance{path.string(), parse_noise_metadata(noise_meta, seed_meta)};
    return make_samples(std::move(grid), std::move(values), std::move(provenance));
}

}  // namespace trigfit
