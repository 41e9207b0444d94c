#pragma once

#include <functional>

#include "trigfit/lasso.hpp"

namespace trigfit {

/// L2 distance between f and p over [-pi, pi]: the square root of the
/// trapezoidal quadrature of (f - p)^2 on a quad_points grid. quad_points
/// must exceed twice the degree of p (at least 2*degree + 2) so the
/// quadrature resolves (f - p)^2 past the aliasing boundary; quad_points = 0
/// selects the default 10 * p.node_count.
double l2_error(const std::function<double(double)>& f, const TrigPolynomial& p,
                std::size_t quad_points = 0);

/// Same, with f given as dense samples; their grid is the quadrature grid
/// and must satisfy the same resolution requirement.
double l2_error(const SampleVector& reference, const TrigPolynomial& p);

/// Max |f - p| over an equidistant grid of eval_points nodes;
/// eval_points = 0 selects the default 10 * p.node_count.
double uniform_error(const std::function<double(double)>& f, const TrigPolynomial& p,
                     std::size_t eval_points = 0);

/// Same, with f given as dense samples evaluated on their own grid.
double uniform_error(const SampleVector& reference, const TrigPolynomial& p);

/// K = sum over stored coefficients of S_lambda(c)*c - S_lambda(c)^2.
/// Nonnegative for every coefficient vector and lambda >= 0; measures how
/// much the shrinkage tightens the L2 stability bound below the classical
/// sqrt(2 pi) * sup|f|.
double k_functional(const TrigCoefficients& coeffs, double lambda);

/// sqrt(2*pi*sup_f^2 - 2*K): computable right-hand side of the stability
/// estimate l2_norm(lasso interpolant) <= bound. At lambda = 0 it reduces to
/// the classical sqrt(2 pi) * sup_f. Throws std::domain_error when the
/// radicand is negative, which can only mean sup_f underestimates the actual
/// supremum (K >= 0 always holds).
double stability_bound(const TrigCoefficients& coeffs, double lambda, double sup_f);

struct BestApproxProxy {
    TrigPolynomial polynomial;  ///< degree-n truncation of a high-resolution interpolant
    double uniform_error = 0.0; ///< its sup-norm distance from f on a dense grid
};

/// Upper-bound proxy for the best uniform approximation error E_n(f): sample
/// f cleanly on the smallest odd M >= oversample * (2n + 1) nodes,
/// interpolate, truncate to degree n, and measure the uniform error on a
/// 10*M grid. The true E_n never exceeds the reported error.
BestApproxProxy best_approx_proxy(const std::function<double(double)>& f,
                                  std::size_t degree, std::size_t oversample);

}  // namespace trigfit
