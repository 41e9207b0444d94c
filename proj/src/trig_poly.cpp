#include "trigfit/trig_poly.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>

#include "trigfit/csv.hpp"
#include "trigfit/errors.hpp"
#include "trigfit/grid.hpp"

namespace trigfit {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

}  // namespace

std::size_t sine_mode_count(std::size_t node_count) {
    const std::size_t n = node_count / 2;
    if (node_count % 2 == 1) return n;
    return n == 0 ? 0 : n - 1;
}

TrigCoefficients TrigCoefficients::zeros(std::size_t node_count, bool even_only) {
    if (node_count == 0)
        throw std::invalid_argument("TrigCoefficients: node_count must be at least 1");
    TrigCoefficients c;
    c.node_count = node_count;
    c.degree = node_count / 2;
    c.halved_top = node_count % 2 == 0;
    c.even_only = even_only;
    c.a.assign(c.degree + 1, 0.0);
    if (!even_only) c.b.assign(sine_mode_count(node_count), 0.0);
    return c;
}

void validate_layout(const TrigCoefficients& coeffs) {
    if (coeffs.node_count == 0)
        throw IncompatibleLayout("coefficient layout: node_count must be at least 1");
    if (coeffs.degree != coeffs.node_count / 2)
        throw IncompatibleLayout("coefficient layout: degree must be floor(node_count/2)");
    if (coeffs.halved_top != (coeffs.node_count % 2 == 0))
        throw IncompatibleLayout("coefficient layout: halved_top must track node parity");
    if (coeffs.a.size() != coeffs.degree + 1)
        throw IncompatibleLayout("coefficient layout: cosine count must be degree + 1");
    const std::size_t sines = coeffs.even_only ? 0 : sine_mode_count(coeffs.node_count);
    if (coeffs.b.size() != sines)
        throw IncompatibleLayout("coefficient layout: unexpected sine count");
}

TrigCoefficients promote_to_full(const TrigCoefficients& coeffs) {
    validate_layout(coeffs);
    if (!coeffs.even_only) return coeffs;
    TrigCoefficients full = coeffs;
    full.even_only = false;
    full.b.assign(sine_mode_count(coeffs.node_count), 0.0);
    return full;
}

namespace basis {

std::vector<Mode> modes(std::size_t node_count, bool even_only) {
    if (node_count == 0)
        throw std::invalid_argument("basis::modes: node_count must be at least 1");
    const std::size_t n = node_count / 2;
    std::vector<Mode> out;
    out.reserve(even_only ? n + 1 : node_count);
    for (std::size_t l = 0; l <= n; ++l) out.push_back({Kind::cosine, l});
    if (!even_only)
        for (std::size_t l = 1; l <= sine_mode_count(node_count); ++l)
            out.push_back({Kind::sine, l});
    return out;
}

double value(Mode mode, double x, std::size_t node_count) {
    const double lx = static_cast<double>(mode.index) * x;
    if (mode.kind == Kind::cosine) {
        if (mode.index == 0) return kInvSqrt2Pi;
        const bool halved = node_count % 2 == 0 && mode.index == node_count / 2;
        return std::cos(lx) * (halved ? kInvSqrt2Pi : kInvSqrtPi);
    }
    return std::sin(lx) * kInvSqrtPi;
}

}  // namespace basis

TrigPolynomial::TrigPolynomial(TrigCoefficients coeffs) : coeffs_(std::move(coeffs)) {
    validate_layout(coeffs_);
}

double TrigPolynomial::operator()(double x) const {
    const TrigCoefficients& c = coeffs_;
    double acc = c.a[0] * kInvSqrt2Pi;
    for (std::size_t l = 1; l < c.a.size(); ++l) {
        const bool halved = c.halved_top && l == c.degree;
        acc += c.a[l] * std::cos(static_cast<double>(l) * x) * (halved ? kInvSqrt2Pi : kInvSqrtPi);
    }
    for (std::size_t l = 1; l <= c.b.size(); ++l)
        acc += c.b[l - 1] * std::sin(static_cast<double>(l) * x) * kInvSqrtPi;
    return acc;
}

std::vector<double> TrigPolynomial::eval_dense(std::size_t grid_size) const {
    const EquidistantGrid grid = make_grid(grid_size);
    std::vector<double> out(grid_size);
    for (std::size_t j = 0; j < grid_size; ++j) out[j] = (*this)(grid.nodes[j]);
    return out;
}

double TrigPolynomial::l2_norm() const {
    const TrigCoefficients& c = coeffs_;
    double acc = c.a[0] * c.a[0];
    for (std::size_t l = 1; l < c.a.size(); ++l) {
        const bool halved = c.halved_top && l == c.degree;
        acc += c.a[l] * c.a[l] * (halved ? 0.5 : 1.0);
    }
    for (double v : c.b) acc += v * v;
    return std::sqrt(acc);
}

TrigPolynomial subtract(const TrigPolynomial& p, const TrigPolynomial& q) {
    TrigCoefficients cp = promote_to_full(p.coefficients());
    const TrigCoefficients cq = promote_to_full(q.coefficients());
    if (cp.node_count != cq.node_count || cp.degree != cq.degree ||
        cp.halved_top != cq.halved_top)
        throw IncompatibleLayout("subtract: operand layouts do not match");
    for (std::size_t i = 0; i < cp.a.size(); ++i) cp.a[i] -= cq.a[i];
    for (std::size_t i = 0; i < cp.b.size(); ++i) cp.b[i] -= cq.b[i];
    return TrigPolynomial(std::move(cp));
}

void write_coefficients_csv(const TrigCoefficients& coeffs,
                            const std::filesystem::path& path) {
    validate_layout(coeffs);
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw IoError("cannot open for writing: " + path.string());
    file << "# trigfit coefficients\n";
    file << "# node_count: " << coeffs.node_count << "\n";
    file << "# even_only: " << (coeffs.even_only ? 1 : 0) << "\n";
    file << "# columns: kind,index,value\n";
    for (std::size_t l = 0; l < coeffs.a.size(); ++l)
        file << "cos," << l << "," << format_double(coeffs.a[l]) << "\n";
    for (std::size_t l = 1; l <= coeffs.b.size(); ++l)
        file << "sin," << l << "," << format_double(coeffs.b[l - 1]) << "\n";
    if (!file)
        throw IoError("write failed: " + path.string());
}

TrigCoefficients read_coefficients_csv(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw IoError("cannot open for reading: " + path.string());

    std::size_t node_count = 0;
    bool even_only = false;
    bool have_node_count = false;
    std::vector<std::string> rows;
    std::vector<std::size_t> row_lines;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string_view view(line);
            if (view.starts_with("# node_count:")) {
                const auto tail = view.substr(13);
                auto [ptr, ec] = std::from_chars(tail.data() + tail.find_first_not_of(' '),
                                                 tail.data() + tail.size(), node_count);
                if (ec != std::errc())
                    throw ParseError("bad node_count metadata", line_no);
                have_node_count = true;
            } else if (view.starts_with("# even_only:")) {
                even_only = view.find('1') != std::string_view::npos;
            }
            continue;
        }
        rows.push_back(line);
        row_lines.push_back(line_no);
    }
    if (!have_node_count)
        throw ParseError("missing '# node_count:' metadata", line_no);

    TrigCoefficients coeffs = TrigCoefficients::zeros(node_count, even_only);
    std::vector<bool> seen_a(coeffs.a.size(), false);
    std::vector<bool> seen_b(coeffs.b.size(), false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string& row = rows[i];
        const std::size_t at = row_lines[i];
        const auto first = row.find(',');
        const auto second = row.find(',', first + 1);
        if (first == std::string::npos || second == std::string::npos)
            throw ParseError("expected kind,index,value", at);
        const std::string_view kind(row.data(), first);
        std::size_t index = 0;
        {
            auto [ptr, ec] = std::from_chars(row.data() + first + 1, row.data() + second, index);
            if (ec != std::errc() || ptr != row.data() + second)
                throw ParseError("bad coefficient index", at);
        }
        double value = 0.0;
        {
            auto [ptr, ec] =
                std::from_chars(row.data() + second + 1, row.data() + row.size(), value);
            if (ec != std::errc() || ptr != row.data() + row.size())
                throw ParseError("bad coefficient value", at);
        }
        if (kind == "cos") {
            if (index >= coeffs.a.size() || seen_a[index])
                throw ParseError("cosine index out of range or repeated", at);
            coeffs.a[index] = value;
            seen_a[index] = true;
        } else if (kind == "sin") {
            if (index == 0 || index > coeffs.b.size() || seen_b[index - 1])
                throw ParseError("sine index out of range or repeated", at);
            coeffs.b[index - 1] = value;
            seen_b[index - 1] = true;
        } else {
            throw ParseError("coefficient kind must be cos or sin", at);
        }
    }
    if (rows.size() != coeffs.stored_count())
        throw ParseError("coefficient count does not match the layout", line_no);
    return coeffs;
}

}  // namespace trigfit
