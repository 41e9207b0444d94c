#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

namespace trigfit {

/// Number of sine modes stored for an N-node grid: floor(N/2) for odd N,
/// floor(N/2) - 1 for even N (sin(n x) vanishes at every node of an even
/// grid, so that mode carries no information and is not stored).
std::size_t sine_mode_count(std::size_t node_count);

/// Real coefficients in the trigonometric basis that is orthonormal under
/// the discrete inner product (2*pi/N) * sum_j phi(x_j) psi(x_j):
///
///     phi_0        = 1 / sqrt(2 pi)
///     cosine mode l = cos(l x) / sqrt(pi),   1 <= l <= n
///     sine mode l   = sin(l x) / sqrt(pi),   1 <= l <= sine_mode_count(N)
///
/// with n = floor(N/2). For even N the degree-n cosine mode is normalized as
/// cos(n x) / sqrt(2 pi) instead; `halved_top` records that convention.
/// `even_only` marks the cosine-only layout used for even functions (b is
/// then empty). Stored-coefficient count: N for the full layout, n+1 for
/// even_only.
struct TrigCoefficients {
    std::size_t degree = 0;      ///< n = floor(node_count / 2)
    std::size_t node_count = 0;  ///< N, the producing grid size
    std::vector<double> a;       ///< a[l] for cosine mode l = 0..degree
    std::vector<double> b;       ///< b[l-1] for sine mode l = 1..sine_mode_count(N)
    bool halved_top = false;     ///< true iff node_count is even
    bool even_only = false;

    /// All-zero coefficients in the layout implied by node_count.
    static TrigCoefficients zeros(std::size_t node_count, bool even_only = false);

    std::size_t stored_count() const { return a.size() + b.size(); }
};

/// Throws IncompatibleLayout unless the field values form a consistent
/// layout (degree, vector lengths, parity flags).
void validate_layout(const TrigCoefficients& coeffs);

/// Same coefficients in the full layout: sine entries filled with zeros.
/// No-op for coefficients that are already full.
TrigCoefficients promote_to_full(const TrigCoefficients& coeffs);

namespace basis {

enum class Kind { cosine, sine };

struct Mode {
    Kind kind = Kind::cosine;
    std::size_t index = 0;  ///< frequency l
};

/// Stored modes for an N-node grid in coefficient-storage order: cosine
/// modes l = 0..n, then (unless even_only) sine modes l = 1..sine_mode_count(N).
std::vector<Mode> modes(std::size_t node_count, bool even_only);

/// Value of the normalized basis function at x. The normalization depends on
/// node_count through the halved top mode.
double value(Mode mode, double x, std::size_t node_count);

}  // namespace basis

/// A trigonometric polynomial held by its coefficients in the basis above.
class TrigPolynomial {
public:
    TrigPolynomial() : coeffs_(TrigCoefficients::zeros(1)) {}
    explicit TrigPolynomial(TrigCoefficients coeffs);

    const TrigCoefficients& coefficients() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.degree; }
    std::size_t node_count() const { return coeffs_.node_count; }

    /// Point evaluation; 2*pi periodic for any x.
    double operator()(double x) const;

    /// Values on the equidistant grid of `grid_size` nodes, computed point by
    /// point with operator() (same code path, same rounding).
    std::vector<double> eval_dense(std::size_t grid_size) const;

    /// Continuous L2 norm over [-pi, pi]. By orthonormality this is the
    /// Euclidean norm of the coefficients, except that a halved top mode
    /// contributes a_n^2 / 2 (its continuous norm is 1/sqrt(2), not 1).
    double l2_norm() const;

private:
    TrigCoefficients coeffs_;
};

/// Coefficient-wise difference. even_only operands are promoted to the full
/// layout first; after promotion the layouts (degree, node_count, halved_top)
/// must agree, otherwise IncompatibleLayout is thrown.
TrigPolynomial subtract(const TrigPolynomial& p, const TrigPolynomial& q);

/// One CSV row per stored coefficient, columns (kind, index, value) with
/// kind in {cos, sin}, preceded by '#' metadata recording the layout. Values
/// are written with 17 significant digits, which round-trips every double
/// exactly.
void write_coefficients_csv(const TrigCoefficients& coeffs,
                            const std::filesystem::path& path);
TrigCoefficients read_coefficients_csv(const std::filesystem::path& path);

}  // namespace trigfit
