// Coefficient layout rules, point and dense evaluation, the L2 norm and its
// relation to discrete quadrature, polynomial subtraction, and the exact
// CSV round-trip of coefficient sets.

#include <cmath>
#include <cstddef>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "trigfit/errors.hpp"
#include "trigfit/grid.hpp"
#include "trigfit/trig_poly.hpp"

using trigfit::IncompatibleLayout;
using trigfit::ParseError;
using trigfit::TrigCoefficients;
using trigfit::TrigPolynomial;
using trigfit::sine_mode_count;

namespace {

const double kPi = std::numbers::pi;
const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);
const double kSqrtPi = std::sqrt(std::numbers::pi);

}  // namespace

TEST_CASE("sine mode counts: floor(N/2) for odd N, one fewer for even N") {
    CHECK(sine_mode_count(1) == 0);
    CHECK(sine_mode_count(2) == 0);
    CHECK(sine_mode_count(3) == 1);
    CHECK(sine_mode_count(4) == 1);
    CHECK(sine_mode_count(5) == 2);
    CHECK(sine_mode_count(8) == 3);
    CHECK(sine_mode_count(9) == 4);
    CHECK(sine_mode_count(64) == 31);
    CHECK(sine_mode_count(501) == 250);
}

TEST_CASE("zero layouts store exactly N coefficients (n+1 when cosine-only)") {
    const auto odd = TrigCoefficients::zeros(7);
    CHECK(odd.degree == 3);
    CHECK(odd.a.size() == 4);
    CHECK(odd.b.size() == 3);
    CHECK_FALSE(odd.halved_top);
    CHECK(odd.stored_count() == 7);

    const auto even = TrigCoefficients::zeros(8);
    CHECK(even.degree == 4);
    CHECK(even.a.size() == 5);
    CHECK(even.b.size() == 3);
    CHECK(even.halved_top);
    CHECK(even.stored_count() == 8);

    const auto cosine_only = TrigCoefficients::zeros(8, true);
    CHECK(cosine_only.even_only);
    CHECK(cosine_only.a.size() == 5);
    CHECK(cosine_only.b.empty());
    CHECK(cosine_only.stored_count() == 5);

    const auto single = TrigCoefficients::zeros(1);
    CHECK(single.degree == 0);
    CHECK(single.stored_count() == 1);

    CHECK_THROWS_AS(TrigCoefficients::zeros(0), std::invalid_argument);
}

TEST_CASE("layout validation rejects inconsistent field combinations") {
    CHECK_NOTHROW(trigfit::validate_layout(TrigCoefficients::zeros(6)));

    auto too_many_sines = TrigCoefficients::zeros(7);
    too_many_sines.b.push_back(0.0);
    CHECK_THROWS_AS(trigfit::validate_layout(too_many_sines), IncompatibleLayout);

    auto wrong_parity = TrigCoefficients::zeros(7);
    wrong_parity.halved_top = true;
    CHECK_THROWS_AS(trigfit::validate_layout(wrong_parity), IncompatibleLayout);

    auto wrong_degree = TrigCoefficients::zeros(7);
    wrong_degree.degree = 2;
    CHECK_THROWS_AS(trigfit::validate_layout(wrong_degree), IncompatibleLayout);
}

TEST_CASE("point evaluation of single-mode polynomials") {
    auto constant = TrigCoefficients::zeros(5);
    constant.a[0] = kSqrt2Pi;
    const TrigPolynomial one(constant);
    for (double x : {0.0, 1.3, -2.7, 100.0})
        CHECK(std::abs(one(x) - 1.0) < 1e-15);

    auto cosine = TrigCoefficients::zeros(5);
    cosine.a[1] = kSqrtPi;
    const TrigPolynomial cos_x(cosine);
    CHECK(std::abs(cos_x(0.0) - 1.0) < 1e-15);
    CHECK(std::abs(cos_x(kPi / 2.0)) < 1e-15);

    auto sine = TrigCoefficients::zeros(5);
    sine.b[1] = kSqrtPi;
    const TrigPolynomial sin_2x(sine);
    CHECK(std::abs(sin_2x(kPi / 4.0) - 1.0) < 1e-15);
}

TEST_CASE("halved top mode evaluates as cos(n x)/sqrt(2 pi)") {
    auto top = TrigCoefficients::zeros(8);
    top.a[4] = kSqrt2Pi;
    const TrigPolynomial p(top);
    CHECK(std::abs(p(0.0) - 1.0) < 1e-15);
    CHECK(std::abs(p(kPi / 4.0) + 1.0) < 1e-15);
}

TEST_CASE("dense evaluation shares the point-evaluation code path") {
    auto constant = TrigCoefficients::zeros(3);
    constant.a[0] = 2.5;
    const TrigPolynomial p(constant);
    const auto values = p.eval_dense(7);
    REQUIRE(values.size() == 7);
    for (double v : values) CHECK(v == p(0.0));

    auto cosine = TrigCoefficients::zeros(5);
    cosine.a[1] = kSqrtPi;
    const TrigPolynomial cos_x(cosine);
    const auto four = cos_x.eval_dense(4);
    REQUIRE(four.size() == 4);
    CHECK(std::abs(four[0] + 1.0) < 1e-15);
    CHECK(std::abs(four[1]) < 1e-15);
    CHECK(std::abs(four[2] - 1.0) < 1e-15);
    CHECK(std::abs(four[3]) < 1e-15);

    const TrigPolynomial q(testsupport::random_coefficients(7, 9));
    const auto grid = trigfit::make_grid(17);
    const auto dense = q.eval_dense(17);
    for (std::size_t j = 0; j < 17; ++j) CHECK(dense[j] == q(grid.nodes[j]));

    CHECK_THROWS_AS(p.eval_dense(0), std::invalid_argument);
}

TEST_CASE("L2 norm equals the coefficient norm, top mode halved for even N") {
    CHECK(TrigPolynomial(TrigCoefficients::zeros(9)).l2_norm() == 0.0);

    auto cosine = TrigCoefficients::zeros(5);
    cosine.a[1] = kSqrtPi;
    CHECK(std::abs(TrigPolynomial(cosine).l2_norm() - kSqrtPi) < 1e-15);

    auto constant = TrigCoefficients::zeros(5);
    constant.a[0] = kSqrt2Pi;
    CHECK(std::abs(TrigPolynomial(constant).l2_norm() - kSqrt2Pi) < 1e-15);

    auto top = TrigCoefficients::zeros(8);
    top.a[4] = 1.5;
    CHECK(std::abs(TrigPolynomial(top).l2_norm() - 1.5 / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("odd-N L2 norm squared matches the discrete quadrature of p^2") {
    const TrigPolynomial p(testsupport::random_coefficients(11, 9));
    const auto grid = trigfit::make_grid(9);
    std::vector<double> squared(9);
    for (std::size_t j = 0; j < 9; ++j) {
        const double v = p(grid.nodes[j]);
        squared[j] = v * v;
    }
    const double quad = trigfit::trapezoidal(grid, squared);
    const double norm2 = p.l2_norm() * p.l2_norm();
    CHECK(std::abs(quad - norm2) < 1e-10 * std::max(1.0, norm2));
}

TEST_CASE("even-N discrete quadrature of p^2 exceeds the L2 norm by a_n^2/2") {
    const TrigPolynomial p(testsupport::random_coefficients(13, 8));
    const auto grid = trigfit::make_grid(8);
    std::vector<double> squared(8);
    for (std::size_t j = 0; j < 8; ++j) {
        const double v = p(grid.nodes[j]);
        squared[j] = v * v;
    }
    const double quad = trigfit::trapezoidal(grid, squared);
    const double norm2 = p.l2_norm() * p.l2_norm();
    const double top = p.coefficients().a[4];
    CHECK(std::abs(quad - norm2 - 0.5 * top * top) < 1e-10);
}

TEST_CASE("subtraction is coefficient-wise and promotes cosine-only operands") {
    const TrigPolynomial p(testsupport::random_coefficients(17, 7));
    const auto zero = trigfit::subtract(p, p);
    for (double v : zero.coefficients().a) CHECK(v == 0.0);
    for (double v : zero.coefficients().b) CHECK(v == 0.0);

    auto lhs = TrigCoefficients::zeros(5);
    lhs.a[1] = kSqrtPi;
    auto rhs = TrigCoefficients::zeros(5);
    rhs.a[1] = 0.5;
    const auto diff = trigfit::subtract(TrigPolynomial(lhs), TrigPolynomial(rhs));
    CHECK(diff.coefficients().a[1] == kSqrtPi - 0.5);

    auto even = TrigCoefficients::zeros(9, true);
    even.a[2] = 1.0;
    auto full = TrigCoefficients::zeros(9);
    full.a[2] = 0.25;
    const auto promoted = trigfit::subtract(TrigPolynomial(even), TrigPolynomial(full));
    CHECK_FALSE(promoted.coefficients().even_only);
    CHECK(promoted.coefficients().a[2] == 0.75);
    for (double v : promoted.coefficients().b) CHECK(v == 0.0);

    const TrigPolynomial other(testsupport::random_coefficients(19, 5));
    CHECK_THROWS_AS(trigfit::subtract(p, other), IncompatibleLayout);
}

TEST_CASE("coefficient CSV round-trips bit-exactly") {
    const testsupport::TempDir dir("coeffs");

    for (std::size_t n : {8u, 9u}) {
        const auto original = testsupport::random_coefficients(23 + n, n);
        const auto path = dir.file("full_" + std::to_string(n) + ".csv");
        trigfit::write_coefficients_csv(original, path);
        const auto restored = trigfit::read_coefficients_csv(path);
        CHECK(restored.node_count == original.node_count);
        CHECK(restored.degree == original.degree);
        CHECK(restored.halved_top == original.halved_top);
        CHECK(restored.even_only == original.even_only);
        REQUIRE(restored.a.size() == original.a.size());
        REQUIRE(restored.b.size() == original.b.size());
        for (std::size_t i = 0; i < original.a.size(); ++i)
            CHECK(restored.a[i] == original.a[i]);
        for (std::size_t i = 0; i < original.b.size(); ++i)
            CHECK(restored.b[i] == original.b[i]);
    }

    auto even = TrigCoefficients::zeros(9, true);
    even.a[3] = -0.087662345159857173;
    const auto path = dir.file("even.csv");
    trigfit::write_coefficients_csv(even, path);
    const auto restored = trigfit::read_coefficients_csv(path);
    CHECK(restored.even_only);
    CHECK(restored.a[3] == even.a[3]);
    CHECK(restored.b.empty());
}

TEST_CASE("coefficient CSV reader rejects malformed input with line numbers") {
    const testsupport::TempDir dir("badcoeffs");

    const auto write = [&](const std::string& name, const std::string& body) {
        std::ofstream file(dir.file(name), std::ios::binary);
        file << body;
        return dir.file(name);
    };

    const auto bad_kind =
        write("kind.csv", "# node_count: 3\ncos,0,1\ntan,1,0.5\nsin,1,0\n");
    CHECK_THROWS_AS(trigfit::read_coefficients_csv(bad_kind), ParseError);
    try {
        trigfit::read_coefficients_csv(bad_kind);
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }

    const auto duplicate =
        write("dup.csv", "# node_count: 3\ncos,0,1\ncos,0,2\nsin,1,0\n");
    CHECK_THROWS_AS(trigfit::read_coefficients_csv(duplicate), ParseError);

    const auto out_of_range =
        write("range.csv", "# node_count: 3\ncos,0,1\ncos,5,2\nsin,1,0\n");
    CHECK_THROWS_AS(trigfit::read_coefficients_csv(out_of_range), ParseError);

    const auto missing_row = write("short.csv", "# node_count: 3\ncos,0,1\n");
    CHECK_THROWS_AS(trigfit::read_coefficients_csv(missing_row), ParseError);

    const auto no_metadata = write("meta.csv", "cos,0,1\n");
    CHECK_THROWS_AS(trigfit::read_coefficients_csv(no_metadata), ParseError);

    CHECK_THROWS_AS(trigfit::read_coefficients_csv(dir.file("absent.csv")),
                    trigfit::IoError);
}
