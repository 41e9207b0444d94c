#include "trigfit/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "trigfit/errors.hpp"

namespace trigfit {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#ff7f0e", "#9467bd", "#8c564b"};
constexpr int kMarginLeft = 72;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 42;
constexpr int kMarginBottom = 56;

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    bool log = false;

    bool usable(double v) const { return std::isfinite(v) && (!log || v > 0.0); }

    double to_unit(double v) const {
        const double a = log ? std::log10(v) : v;
        const double l = log ? std::log10(lo) : lo;
        const double h = log ? std::log10(hi) : hi;
        return (a - l) / (h - l);
    }
};

/// Linear tick step: the range divided into about six "nice" intervals
/// (1, 2, or 5 times a power of ten).
double nice_step(double range) {
    const double raw = range / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    if (norm < 1.5) return mag;
    if (norm < 3.5) return 2.0 * mag;
    if (norm < 7.5) return 5.0 * mag;
    return 10.0 * mag;
}

std::vector<double> make_ticks(const Axis& axis) {
    std::vector<double> ticks;
    if (axis.log) {
        const int lo = static_cast<int>(std::floor(std::log10(axis.lo)));
        const int hi = static_cast<int>(std::ceil(std::log10(axis.hi)));
        const int stride = std::max(1, (hi - lo) / 10);
        for (int k = lo; k <= hi; k += stride) ticks.push_back(std::pow(10.0, k));
    } else {
        const double step = nice_step(axis.hi - axis.lo);
        const double first = std::ceil(axis.lo / step) * step;
        for (double t = first; t <= axis.hi + step * 1e-9; t += step)
            ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
    }
    return ticks;
}

}  // namespace

void write_svg_plot(const std::filesystem::path& path,
                    const std::vector<PlotSeries>& series, const PlotOptions& options) {
    Axis x_axis{std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity(), options.log_x};
    Axis y_axis{std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity(), options.log_y};

    std::size_t usable_points = 0;
    for (const PlotSeries& s : series) {
        const std::size_t count = std::min(s.x.size(), s.y.size());
        for (std::size_t i = 0; i < count; ++i) {
            if (!x_axis.usable(s.x[i]) || !y_axis.usable(s.y[i])) continue;
            ++usable_points;
            x_axis.lo = std::min(x_axis.lo, s.x[i]);
            x_axis.hi = std::max(x_axis.hi, s.x[i]);
            y_axis.lo = std::min(y_axis.lo, s.y[i]);
            y_axis.hi = std::max(y_axis.hi, s.y[i]);
        }
    }
    if (usable_points == 0)
        throw std::invalid_argument("write_svg_plot: no plottable points");

    const auto widen = [](Axis& axis) {
        if (axis.lo < axis.hi) return;
        if (axis.log) {
            axis.lo /= 10.0;
            axis.hi *= 10.0;
        } else {
            const double pad = axis.lo == 0.0 ? 1.0 : std::abs(axis.lo) * 0.1;
            axis.lo -= pad;
            axis.hi += pad;
        }
    };
    widen(x_axis);
    widen(y_axis);

    const double plot_w = options.width - kMarginLeft - kMarginRight;
    const double plot_h = options.height - kMarginTop - kMarginBottom;
    const auto px = [&](double v) { return kMarginLeft + x_axis.to_unit(v) * plot_w; };
    const auto py = [&](double v) {
        return options.height - kMarginBottom - y_axis.to_unit(v) * plot_h;
    };

    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw IoError("cannot open for writing: " + path.string());

    file << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
         << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << " "
         << options.height << "\">\n";
    file << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty())
        file << "<text x=\"" << options.width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
             << "font-family=\"sans-serif\" font-size=\"15\">" << xml_escape(options.title)
             << "</text>\n";

    // Frame and ticks.
    file << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
         << coord(plot_w) << "\" height=\"" << coord(plot_h)
         << "\" fill=\"none\" stroke=\"black\"/>\n";
    const double y0 = options.height - kMarginBottom;
    for (double t : make_ticks(x_axis)) {
        if (t < x_axis.lo || t > x_axis.hi) continue;
        const double x = px(t);
        file << "<line x1=\"" << coord(x) << "\" y1=\"" << coord(y0) << "\" x2=\"" << coord(x)
             << "\" y2=\"" << coord(y0 + 5) << "\" stroke=\"black\"/>\n";
        file << "<text x=\"" << coord(x) << "\" y=\"" << coord(y0 + 19)
             << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
             << tick_label(t) << "</text>\n";
    }
    for (double t : make_ticks(y_axis)) {
        if (t < y_axis.lo || t > y_axis.hi) continue;
        const double y = py(t);
        file << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << coord(y) << "\" x2=\""
             << kMarginLeft << "\" y2=\"" << coord(y) << "\" stroke=\"black\"/>\n";
        file << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << coord(y + 4)
             << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
             << tick_label(t) << "</text>\n";
    }
    if (!options.x_label.empty())
        file << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\""
             << options.height - 14
             << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
             << xml_escape(options.x_label) << "</text>\n";
    if (!options.y_label.empty())
        file << "<text x=\"18\" y=\"" << kMarginTop + plot_h / 2
             << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
             << "transform=\"rotate(-90 18 " << kMarginTop + plot_h / 2 << ")\">"
             << xml_escape(options.y_label) << "</text>\n";

    // Series polylines; a gap in usable points starts a new polyline.
    for (std::size_t si = 0; si < series.size(); ++si) {
        const PlotSeries& s = series[si];
        const char* color = kPalette[si % std::size(kPalette)];
        const std::size_t count = std::min(s.x.size(), s.y.size());
        std::string points;
        const auto flush = [&]() {
            if (points.empty()) return;
            file << "<polyline fill=\"none\" stroke=\"" << color
                 << "\" stroke-width=\"1.5\" points=\"" << points << "\"/>\n";
            points.clear();
        };
        for (std::size_t i = 0; i < count; ++i) {
            if (!x_axis.usable(s.x[i]) || !y_axis.usable(s.y[i])) {
                flush();
                continue;
            }
            points += coord(px(s.x[i]));
            points += ",";
            points += coord(py(s.y[i]));
            points += " ";
        }
        flush();
    }

    // Legend, top-right inside the frame.
    const double legend_x = options.width - kMarginRight - 170;
    double legend_y = kMarginTop + 14;
    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kPalette[si % std::size(kPalette)];
        file << "<line x1=\"" << coord(legend_x) << "\" y1=\"" << coord(legend_y - 4)
             << "\" x2=\"" << coord(legend_x + 24) << "\" y2=\"" << coord(legend_y - 4)
             << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        file << "<text x=\"" << coord(legend_x + 30) << "\" y=\"" << coord(legend_y)
             << "\" font-family=\"sans-serif\" font-size=\"11\">"
             << xml_escape(series[si].label) << "</text>\n";
        legend_y += 16;
    }

    file << "</svg>\n";
    if (!file)
        throw IoError("write failed: " + path.string());
}

}  // namespace trigfit
