//! Dense linear algebra and the boundary-value experiments built on it.

pub mod bvp;
pub mod linalg;

pub use bvp::{
    assemble, assemble_central, assemble_fractional, assemble_unified, convergence_study, example1,
    example2, fractional_diagnostic, solve, unified_row, BvpProblem, ScalarFn, Scheme, SolveReport,
};
pub use linalg::{solve_dense, DenseMatrix};
