#pragma once

#include "trigfit/samples.hpp"
#include "trigfit/trig_poly.hpp"

namespace trigfit {

/// Coefficients of the degree-n trigonometric interpolant, n = floor(N/2):
/// each one is the trapezoidal-rule discretization of the corresponding
/// continuous Fourier coefficient,
///
///     a_l = (2*pi/N) * sum_j f(x_j) * c_l(x_j),   likewise b_l with sin,
///
/// computed by direct O(N*n) summation. The direct sum is the normative
/// definition; any faster transform must reproduce it.
TrigCoefficients coefficients(const SampleVector& samples);

/// Cosine-only coefficients (the even_only layout). Evenness of the samples
/// is not checked: for arbitrary samples this is the least-squares fit in
/// the cosine subspace; for even samples it carries the full interpolant.
TrigCoefficients even_coefficients(const SampleVector& samples);

/// The interpolating polynomial itself; it reproduces f(x_j) at every node.
TrigPolynomial interpolate(const SampleVector& samples);

/// Polynomial built from even_coefficients.
TrigPolynomial even_interpolate(const SampleVector& samples);

/// Max over stored basis pairs (k, l) of
/// |(2*pi/N) * sum_j phi_k(x_j) phi_l(x_j) - delta_kl|, i.e. how far the
/// basis is from discrete orthonormality on the N-node grid. Zero up to
/// rounding for every N and either layout.
double check_discrete_orthonormality(std::size_t node_count, bool even_only = false);

}  // namespace trigfit
