"""Trigonometric interpolation on equidistant grids with lasso shrinkage.

The heavy lifting lives in the compiled ``trigfit._core`` extension; this
package re-exports its public surface.
"""

from trigfit._core import (
    EquidistantGrid,
    SampleVector,
    TrigCoefficients,
    TrigPolynomial,
    add_noise,
    best_approx_proxy,
    check_discrete_orthonormality,
    coefficients,
    derive_stream,
    eval_signal,
    even_coefficients,
    even_interpolate,
    interpolate,
    k_functional,
    l2_error,
    lambda_max,
    lasso_even_interpolate,
    lasso_interpolate,
    make_grid,
    objective,
    oracle_solve,
    read_coefficients_csv,
    read_samples_csv,
    sample_signal,
    soft_threshold,
    sparsity,
    stability_bound,
    subtract,
    trapezoidal,
    uniform_error,
    write_coefficients_csv,
    write_samples_csv,
)

__all__ = [
    "EquidistantGrid",
    "SampleVector",
    "TrigCoefficients",
    "TrigPolynomial",
    "add_noise",
    "best_approx_proxy",
    "check_discrete_orthonormality",
    "coefficients",
    "derive_stream",
    "eval_signal",
    "even_coefficients",
    "even_interpolate",
    "interpolate",
    "k_functional",
    "l2_error",
    "lambda_max",
    "lasso_even_interpolate",
    "lasso_interpolate",
    "make_grid",
    "objective",
    "oracle_solve",
    "read_coefficients_csv",
    "read_samples_csv",
    "sample_signal",
    "soft_threshold",
    "sparsity",
    "stability_bound",
    "subtract",
    "trapezoidal",
    "uniform_error",
    "write_coefficients_csv",
    "write_samples_csv",
]
