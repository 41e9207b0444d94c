#pragma once

// Shared test helpers: an adaptive Simpson quadrature oracle that is
// independent of the library's trapezoidal rule, deterministic random test
// inputs, a throwaway output directory, and small comparison utilities.

#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "trigfit/noise.hpp"
#include "trigfit/samples.hpp"
#include "trigfit/trig_poly.hpp"

namespace testsupport {

namespace detail {

inline double simpson(double h, double fa, double fm, double fb) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adapt(const std::function<double(double)>& f, double a, double fa, double b,
                    double fb, double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(m - a, fa, flm, fm);
    const double right = simpson(b - m, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b]. Deliberately a different
/// algorithm from the library's equidistant trapezoidal rule so the two can
/// arbitrate each other.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    return detail::adapt(f, a, fa, b, fb, m, fm, detail::simpson(b - a, fa, fm, fb), tol, 48);
}

/// Deterministic uniforms in [lo, hi). The generator here is test plumbing,
/// not the subject under test.
inline std::vector<double> random_doubles(std::uint64_t seed, std::size_t count, double lo,
                                          double hi) {
    trigfit::SplitMix64 rng(seed);
    std::vector<double> out(count);
    for (auto& v : out) v = lo + (hi - lo) * rng.next_unit();
    return out;
}

/// Full-layout coefficients with entries uniform in [-scale, scale).
inline trigfit::TrigCoefficients random_coefficients(std::uint64_t seed,
                                                     std::size_t node_count,
                                                     double scale = 1.0) {
    auto coeffs = trigfit::TrigCoefficients::zeros(node_count);
    trigfit::SplitMix64 rng(seed);
    for (auto& v : coeffs.a) v = scale * (2.0 * rng.next_unit() - 1.0);
    for (auto& v : coeffs.b) v = scale * (2.0 * rng.next_unit() - 1.0);
    return coeffs;
}

/// Max over stored entries of |c - d|; layouts must already agree.
inline double coeff_distance(const trigfit::TrigCoefficients& c,
                             const trigfit::TrigCoefficients& d) {
    double worst = 0.0;
    for (std::size_t i = 0; i < c.a.size(); ++i)
        worst = std::max(worst, std::abs(c.a[i] - d.a[i]));
    for (std::size_t i = 0; i < c.b.size(); ++i)
        worst = std::max(worst, std::abs(c.b[i] - d.b[i]));
    return worst;
}

/// Samples of a callable on the canonical N-node grid.
inline trigfit::SampleVector sample_callable(const std::function<double(double)>& f,
                                             std::size_t node_count,
                                             std::string source = "callable") {
    auto grid = trigfit::make_grid(node_count);
    std::vector<double> values(node_count);
    for (std::size_t j = 0; j < node_count; ++j) values[j] = f(grid.nodes[j]);
    return trigfit::make_samples(std::move(grid), std::move(values),
                                 {std::move(source), std::nullopt});
}

/// Unique directory under the system temp root, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::uint64_t counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("trigfit_test_" + tag + "_" + std::to_string(++counter) + "_" +
                 std::to_string(::getpid()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

/// Whole file as a string (binary read, so byte comparisons are exact).
inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

}  // namespace testsupport
