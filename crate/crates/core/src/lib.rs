//! Explicit difference formulas for classical and fractional derivatives.
//!
//! The central object is the generator polynomial `P(z) = Σ β_j z^j` whose
//! power `P(z)^(α/d)` yields Grünwald-type weights for a derivative of order
//! `α`, accuracy `p` and shift `r`. The coefficients are produced in closed
//! form (numerator/denominator split, O(N²) work), in any of three number
//! fields, and feed the stencil builders and the boundary-value solvers.

pub mod error;
pub mod explicit;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod solvers;
pub mod stencil;

pub use error::{Error, Result};
pub use explicit::{
    beta_coefficients, denominators, derive_params, elementary_symmetric, error_coefficients,
    generator_polynomial, numerators, numerators_tallied, ApproxParams, CoefficientVector,
    ErrorCoefficients,
};
pub use oracle::{esp_direct, numerators_direct, vandermonde_solve, OpCount, DEFAULT_OP_BUDGET};
pub use poly::Poly;
pub use scalar::{
    approx_equal, format_rational, parse_rational, parse_scalar, BigDecimal, Field, Mode, Rational,
    Real, Scalar,
};
pub use series::{
    convergence_diagnostic, grunwald_weights, miller_expand, poly_power_int, ConvergenceDiagnostic,
    WeightSeries,
};
pub use solvers::{
    convergence_study, example1, example2, solve, solve_dense, BvpProblem, DenseMatrix, Scheme,
    SolveReport,
};
pub use stencil::{
    apply_stencil, compact_stencil, noncompact_stencil, render_stencil, shift_for_kind,
    GridSamples, RenderFormat, Samples, Shift, Stencil, StencilKind,
};
