// Equidistant grid construction and the periodic trapezoidal rule: node
// placement, exactness on trigonometric monomials below the aliasing
// boundary, the aliased value at the boundary itself, linearity, and input
// validation.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "trigfit/grid.hpp"

using trigfit::EquidistantGrid;
using trigfit::make_grid;
using trigfit::trapezoidal;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> sample(const EquidistantGrid& grid,
                           const std::function<double(double)>& f) {
    std::vector<double> out(grid.node_count);
    for (std::size_t j = 0; j < grid.node_count; ++j) out[j] = f(grid.nodes[j]);
    return out;
}

}  // namespace

TEST_CASE("grid nodes follow -pi + 2*pi*j/N with weight 2*pi/N") {
    const auto grid = make_grid(5);
    REQUIRE(grid.node_count == 5);
    REQUIRE(grid.nodes.size() == 5);
    CHECK(grid.weight == kTwoPi / 5.0);
    for (std::size_t j = 0; j < 5; ++j)
        CHECK(std::abs(grid.nodes[j] - (-kPi + kTwoPi * double(j) / 5.0)) < 1e-15);

    const auto one = make_grid(1);
    REQUIRE(one.node_count == 1);
    CHECK(one.nodes[0] == -kPi);
    CHECK(one.weight == kTwoPi);

    const auto even = make_grid(8);
    CHECK(even.nodes[4] == 0.0);
    CHECK(std::abs(even.nodes[7] - (kPi - kTwoPi / 8.0)) < 1e-15);
}

TEST_CASE("grid of zero nodes is rejected") {
    CHECK_THROWS_AS(make_grid(0), std::invalid_argument);
}

TEST_CASE("trapezoidal rule integrates constants exactly") {
    for (std::size_t n : {1u, 2u, 5u, 8u}) {
        const auto grid = make_grid(n);
        const std::vector<double> values(n, 3.25);
        CHECK(std::abs(trapezoidal(grid, values) - kTwoPi * 3.25) < 1e-13);
    }
}

TEST_CASE("trapezoidal rule is exact on trig monomials below the aliasing boundary") {
    for (std::size_t n : {2u, 3u, 8u, 17u}) {
        const auto grid = make_grid(n);
        for (std::size_t k = 1; k < n; ++k) {
            const auto cosk = sample(grid, [&](double x) { return std::cos(double(k) * x); });
            const auto sink = sample(grid, [&](double x) { return std::sin(double(k) * x); });
            CHECK(std::abs(trapezoidal(grid, cosk)) < 1e-12);
            CHECK(std::abs(trapezoidal(grid, sink)) < 1e-12);
        }
    }

    // Products stay exact while their degree stays below N: cos^2(2x) has
    // degree 4, so 5 nodes already integrate it to pi.
    const auto grid = make_grid(5);
    const auto squared = sample(grid, [](double x) { return std::cos(2.0 * x) * std::cos(2.0 * x); });
    CHECK(std::abs(trapezoidal(grid, squared) - kPi) < 1e-13);
}

TEST_CASE("degree-N cosine aliases onto the constant: integral (-1)^N * 2*pi") {
    for (std::size_t n : {2u, 3u, 4u, 5u, 8u, 17u, 64u}) {
        const auto grid = make_grid(n);
        const auto cosn = sample(grid, [&](double x) { return std::cos(double(n) * x); });
        const auto sinn = sample(grid, [&](double x) { return std::sin(double(n) * x); });
        const double expected = (n % 2 == 0 ? 1.0 : -1.0) * kTwoPi;
        CHECK(std::abs(trapezoidal(grid, cosn) - expected) < 1e-12);
        CHECK(std::abs(trapezoidal(grid, sinn)) < 1e-12);
    }
}

TEST_CASE("smooth periodic integrand converges to the adaptive quadrature oracle") {
    const auto f = [](double x) { return std::exp(std::sin(x)); };
    const double oracle = testsupport::integrate(f, -kPi, kPi);
    const auto grid = make_grid(33);
    CHECK(std::abs(trapezoidal(grid, sample(grid, f)) - oracle) < 1e-12);
}

TEST_CASE("trapezoidal rule is linear") {
    const auto grid = make_grid(16);
    const auto g = testsupport::random_doubles(101, 16, -1.0, 1.0);
    const auto h = testsupport::random_doubles(202, 16, -1.0, 1.0);
    std::vector<double> mix(16);
    for (std::size_t j = 0; j < 16; ++j) mix[j] = 2.5 * g[j] - 1.25 * h[j];
    const double direct = trapezoidal(grid, mix);
    const double composed = 2.5 * trapezoidal(grid, g) - 1.25 * trapezoidal(grid, h);
    CHECK(std::abs(direct - composed) < 1e-12);
}

TEST_CASE("trapezoidal rule validates its inputs") {
    const auto grid = make_grid(5);
    const std::vector<double> four(4, 1.0);
    CHECK_THROWS_AS(trapezoidal(grid, four), std::invalid_argument);
    const EquidistantGrid empty;
    const std::vector<double> none;
    CHECK_THROWS_AS(trapezoidal(empty, none), std::invalid_argument);
}
