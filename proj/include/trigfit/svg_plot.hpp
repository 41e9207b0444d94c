#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace trigfit {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    int width = 860;
    int height = 540;
};

/// Minimal self-contained SVG line plot: axes with tick labels, optional
/// decade ticks on logarithmic axes, one polyline per series, and a legend.
/// Points that are not finite (or not positive on a log axis) are dropped.
/// Throws std::invalid_argument when nothing remains to plot and IoError
/// when the file cannot be written.
void write_svg_plot(const std::filesystem::path& path,
                    const std::vector<PlotSeries>& series,
                    const PlotOptions& options);

}  // namespace trigfit
