#pragma once

#include <stdexcept>
#include <string>

#include "trigfit/interpolation.hpp"

namespace trigfit {

struct LassoParams {
    double lambda = 0.0;  ///< l1 penalty weight, must be >= 0
};

/// Soft threshold S_k(a) = max(0, a - k) + min(0, a + k): shrinks |a| by k
/// and is exactly zero when |a| <= k. S_0 is the identity on every float.
double soft_threshold(double a, double k);

/// Soft-threshold every stored entry of `coeffs` by `lambda`.
TrigCoefficients soft_threshold(const TrigCoefficients& coeffs, double lambda);

/// The lasso trigonometric interpolant: classical coefficients with every
/// stored entry soft-thresholded by params.lambda. Because the basis is
/// discretely orthonormal, this is the exact minimizer of
///
///     (1/2) * sum_j (2*pi/N) (p(x_j) - f_j)^2 + lambda * sum_l |gamma_l|
///
/// over polynomials p of the sample layout. lambda = 0 returns the classical
/// interpolant unchanged.
TrigPolynomial lasso_interpolate(const SampleVector& samples, const LassoParams& params);

/// Cosine-only variant; thresholds the even_only coefficient set.
TrigPolynomial lasso_even_interpolate(const SampleVector& samples, const LassoParams& params);

/// Count of stored coefficients that are exactly nonzero.
std::size_t sparsity(const TrigCoefficients& coeffs);
std::size_t sparsity(const TrigPolynomial& p);

/// Largest absolute classical coefficient of the samples. The lasso
/// interpolant is nonzero exactly when lambda < lambda_max; at or above it,
/// every coefficient thresholds to zero.
double lambda_max(const SampleVector& samples);

/// Discrete lasso objective of an arbitrary polynomial against the samples:
/// (1/2) * sum_j w (p(x_j) - f_j)^2 + lambda * sum |stored coefficients|.
/// The residual term is evaluated through the quadrature route (polynomial
/// values at the nodes), not through any coefficient-space identity, so this
/// function can arbitrate between the two routes. p.node_count must equal
/// the sample grid size (IncompatibleLayout otherwise).
double objective(const TrigPolynomial& p, const SampleVector& samples,
                 const LassoParams& params);

/// Thrown by oracle_solve when the iteration budget runs out; carries the
/// last iterate for inspection.
class ConvergenceFailure : public std::runtime_error {
public:
    ConvergenceFailure(const std::string& message, TrigCoefficients last)
        : std::runtime_error(message), last_iterate(std::move(last)) {}

    TrigCoefficients last_iterate;
};

/// Independent minimizer of the discrete lasso objective: proximal-gradient
/// iteration (ISTA) with constant step 1/2 started from the zero vector.
/// Gradients are computed by evaluating the current polynomial at the nodes
/// and quadrature-projecting the residual onto each basis function; the
/// closed-form shortcut S_lambda(coefficients(f)) is never taken, so the
/// result checks lasso_interpolate through a disjoint route. The discretely
/// orthonormal design makes the smooth part 1-Lipschitz, and with step 1/2
/// the iterates converge geometrically (rate 1/2) to the exact minimizer.
/// Stops once successive iterates differ by less than `tol` in max norm;
/// throws ConvergenceFailure after `max_iter` iterations without that.
TrigCoefficients oracle_solve(const SampleVector& samples, const LassoParams& params,
                              std::size_t max_iter, double tol);

}  // namespace trigfit
