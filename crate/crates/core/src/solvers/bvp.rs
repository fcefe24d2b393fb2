//! Two-point boundary-value problems `D^α u = f` on `[a, b]` with Dirichlet data.
//!
//! Three discretizations are provided:
//!
//! * `Central`: the classical three-point second difference.
//! * `Unified`: every interior row `i` uses all `N + 1` grid values with the
//!   coefficients for `(α, d, p, r) = (2, 2, N - 1, i)`, so the order grows with
//!   the grid.
//! * `Fractional`: row `i` uses the weights of `P(z)^(α/d)` (J.C.P. Miller
//!   expansion) applied to `u_{i+r-k}`, truncated at the domain ends.
//!
//! Boundary values are moved to the right-hand side and the interior system is
//! solved densely.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::explicit::{beta_coefficients, ApproxParams};
use crate::scalar::{Field, Rational, Real};
use crate::series::{convergence_diagnostic, miller_expand, ConvergenceDiagnostic};
use crate::solvers::linalg::{solve_dense, DenseMatrix};

/// A scalar function shared across threads.
pub type ScalarFn<F> = Arc<dyn Fn(&F) -> F + Send + Sync>;

/// `D^α u = rhs` on `[a, b]`, `u(a) = ua`, `u(b) = ub`.
#[derive(Clone)]
pub struct BvpProblem<F> {
    pub a: F,
    pub b: F,
    pub ua: F,
    pub ub: F,
    pub rhs: ScalarFn<F>,
    pub alpha: F,
    pub exact: Option<ScalarFn<F>>,
}

impl<F: Field> fmt::Debug for BvpProblem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BvpProblem")
            .field("a", &self.a)
            .field("b", &self.b)
            .field("ua", &self.ua)
            .field("ub", &self.ub)
            .field("alpha", &self.alpha)
            .field("has_exact", &self.exact.is_some())
            .finish()
    }
}

impl<F: Field> BvpProblem<F> {
    pub fn new(a: F, b: F, ua: F, ub: F, alpha: F, rhs: ScalarFn<F>) -> Result<Self> {
        if a >= b {
            return Err(Error::InvalidParameter(format!(
                "a < b required, got [{a}, {b}]"
            )));
        }
        if alpha <= F::zero() {
            return Err(Error::InvalidParameter(format!(
                "alpha > 0 required, got {alpha}"
            )));
        }
        Ok(BvpProblem {
            a,
            b,
            ua,
            ub,
            rhs,
            alpha,
            exact: None,
        })
    }

    pub fn with_exact(mut self, exact: ScalarFn<F>) -> Self {
        self.exact = Some(exact);
        self
    }

    pub fn h(&self, n: usize) -> F {
        (self.b.clone() - self.a.clone()) / F::from_usize(n)
    }

    pub fn node(&self, i: usize, n: usize) -> F {
        self.a.clone() + F::from_usize(i) * self.h(n)
    }
}

/// `u'' = -sin x` on `[-1, 1]` with `u = sin x`.
pub fn example1<F: Real>() -> BvpProblem<F> {
    let one = F::one();
    BvpProblem {
        a: -one.clone(),
        b: one.clone(),
        ua: (-one.clone()).sin(),
        ub: one.sin(),
        rhs: Arc::new(|x: &F| -x.sin()),
        alpha: F::from_i64(2),
        exact: Some(Arc::new(|x: &F| x.sin())),
    }
}

/// `D^α u = Γ(4+α)/6 · x³` on `[0, 1]` (lower terminal 0) with `u = x^(3+α)`.
pub fn example2<F: Real>(alpha: F) -> Result<BvpProblem<F>> {
    if alpha <= F::zero() {
        return Err(Error::InvalidParameter(format!(
            "alpha > 0 required, got {alpha}"
        )));
    }
    let scale = (alpha.clone() + F::from_i64(4)).gamma() / F::from_i64(6);
    let power = alpha.clone() + F::from_i64(3);
    Ok(BvpProblem {
        a: F::zero(),
        b: F::one(),
        ua: F::zero(),
        ub: F::one(),
        rhs: Arc::new(move |x: &F| scale.clone() * x.powi(3)),
        alpha,
        exact: Some(Arc::new(move |x: &F| {
            if x.is_zero() {
                F::zero()
            } else {
                x.powf(&power)
            }
        })),
    })
}

/// Discretization selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Central,
    Unified,
    /// Weights of `P(z)^(α/d)` with accuracy `p`, base order `d` and integer shift `r`.
    Fractional {
        p: usize,
        d: usize,
        r: usize,
    },
}

impl Scheme {
    /// Second-order weights with base order 2 and shift 1.
    pub const FRACTIONAL_DEFAULT: Scheme = Scheme::Fractional { p: 2, d: 2, r: 1 };
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scheme::Central => f.write_str("central"),
            Scheme::Unified => f.write_str("unified"),
            Scheme::Fractional { p, d, r } => write!(f, "fractional(p={p}, d={d}, r={r})"),
        }
    }
}

fn check_grid(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("N >= 2 required, got {n}")));
    }
    Ok(())
}

fn check_classical<F: Field>(problem: &BvpProblem<F>) -> Result<()> {
    if problem.alpha != F::from_i64(2) {
        return Err(Error::InvalidParameter(format!(
            "alpha = 2 required for this scheme, got {}",
            problem.alpha
        )));
    }
    Ok(())
}

/// Folds full rows over grid indices `0..=N` into the interior system.
fn fold_boundaries<F: Field>(
    problem: &BvpProblem<F>,
    n: usize,
    rows: Vec<Vec<F>>,
) -> (DenseMatrix<F>, Vec<F>) {
    let mut a = DenseMatrix::zeros(n - 1, n - 1);
    let mut rhs = Vec::with_capacity(n - 1);
    for (i, row) in rows.into_iter().enumerate() {
        let x = problem.node(i + 1, n);
        let f = (problem.rhs)(&x)
            - row[0].clone() * problem.ua.clone()
            - row[n].clone() * problem.ub.clone();
        for (j, w) in row.into_iter().enumerate().take(n).skip(1) {
            a.set(i, j - 1, w);
        }
        rhs.push(f);
    }
    (a, rhs)
}

/// Tridiagonal `(1, -2, 1) / h²` interior system.
pub fn assemble_central<F: Field>(
    problem: &BvpProblem<F>,
    n: usize,
) -> Result<(DenseMatrix<F>, Vec<F>)> {
    check_grid(n)?;
    check_classical(problem)?;
    let h = problem.h(n);
    let h2 = h.clone() * h;
    let rows = (1..n)
        .map(|i| {
            let mut row = vec![F::zero(); n + 1];
            row[i - 1] = F::one() / h2.clone();
            row[i] = F::from_i64(-2) / h2.clone();
            row[i + 1] = F::one() / h2.clone();
            row
        })
        .collect();
    Ok(fold_boundaries(problem, n, rows))
}

/// Coefficients `β_j`, `j = 0..=N`, for interior row `i` of the unified scheme:
/// `(α, d, p, r) = (2, 2, N - 1, i)`, exact.
pub fn unified_row(n: usize, i: usize) -> Result<Vec<Rational>> {
    check_grid(n)?;
    let params = ApproxParams::new(Rational::from_i64(2), 2, n - 1, Rational::from_usize(i))?;
    Ok(beta_coefficients(&params).beta)
}

/// Full-grid rows `B_{i,j} = β_j(i) / h²`. The coefficients are generated
/// exactly and then converted, so no accuracy is lost before the solve.
pub fn assemble_unified<F: Field>(
    problem: &BvpProblem<F>,
    n: usize,
) -> Result<(DenseMatrix<F>, Vec<F>)> {
    check_grid(n)?;
    check_classical(problem)?;
    let h = problem.h(n);
    let h2 = h.clone() * h;
    let rows = (1..n)
        .map(|i| {
            Ok(unified_row(n, i)?
                .iter()
                .map(|b| F::from_rational(b) / h2.clone())
                .collect())
        })
        .collect::<Result<Vec<Vec<F>>>>()?;
    Ok(fold_boundaries(problem, n, rows))
}

fn fractional_params<F: Field>(
    problem: &BvpProblem<F>,
    p: usize,
    d: usize,
    r: usize,
) -> Result<ApproxParams<F>> {
    ApproxParams::new(problem.alpha.clone(), d, p, F::from_usize(r))
}

/// Ratio test for the generator used by [`assemble_fractional`].
pub fn fractional_diagnostic<F: Field>(
    problem: &BvpProblem<F>,
    p: usize,
    d: usize,
    r: usize,
) -> Result<ConvergenceDiagnostic> {
    convergence_diagnostic(&beta_coefficients(&fractional_params(problem, p, d, r)?))
}

/// Row `i` holds `w_k / h^α` at grid index `i + r - k`, for every such index
/// inside `[0, N]`; samples left of the domain are zero by construction.
pub fn assemble_fractional<F: Field>(
    problem: &BvpProblem<F>,
    n: usize,
    p: usize,
    d: usize,
    r: usize,
) -> Result<(DenseMatrix<F>, Vec<F>)> {
    check_grid(n)?;
    let params = fractional_params(problem, p, d, r)?;
    let base = beta_coefficients(&params).beta;
    let series = miller_expand(&base, &params.gamma(), n + r + 1)?;
    let scale = problem.h(n).pow_exponent(&problem.alpha)?;
    let w: Vec<F> = series
        .weights
        .iter()
        .map(|w| w.clone() / scale.clone())
        .collect();
    let rows = (1..n)
        .map(|i| {
            let mut row = vec![F::zero(); n + 1];
            for (j, slot) in row.iter_mut().enumerate().take((i + r).min(n) + 1) {
                *slot = w[i + r - j].clone();
            }
            row
        })
        .collect();
    Ok(fold_boundaries(problem, n, rows))
}

/// Result of one grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport<F> {
    pub n_intervals: usize,
    pub h: F,
    /// `u_0..u_N`, boundary values included.
    pub solution: Vec<F>,
    pub max_error: Option<F>,
    /// `log(e_prev / e) / log(N / N_prev)` against the previous grid of a study.
    pub empirical_order: Option<f64>,
}

pub fn assemble<F: Field>(
    problem: &BvpProblem<F>,
    scheme: Scheme,
    n: usize,
) -> Result<(DenseMatrix<F>, Vec<F>)> {
    match scheme {
        Scheme::Central => assemble_central(problem, n),
        Scheme::Unified => assemble_unified(problem, n),
        Scheme::Fractional { p, d, r } => assemble_fractional(problem, n, p, d, r),
    }
}

pub fn solve<F: Field>(
    problem: &BvpProblem<F>,
    scheme: Scheme,
    n: usize,
) -> Result<SolveReport<F>> {
    let (a, rhs) = assemble(problem, scheme, n)?;
    let interior = solve_dense(&a, &rhs)?;
    let mut solution = Vec::with_capacity(n + 1);
    solution.push(problem.ua.clone());
    solution.extend(interior);
    solution.push(problem.ub.clone());
    let max_error = problem.exact.as_ref().map(|exact| {
        solution
            .iter()
            .enumerate()
            .map(|(i, u)| (u.clone() - exact(&problem.node(i, n))).abs())
            .fold(F::zero(), |acc, e| if e > acc { e } else { acc })
    });
    Ok(SolveReport {
        n_intervals: n,
        h: problem.h(n),
        solution,
        max_error,
        empirical_order: None,
    })
}

/// Solves on every grid in `ns` and fills in empirical orders between
/// consecutive entries.
pub fn convergence_study<F: Field>(
    problem: &BvpProblem<F>,
    scheme: Scheme,
    ns: &[usize],
) -> Result<Vec<SolveReport<F>>> {
    if problem.exact.is_none() {
        return Err(Error::InvalidParameter(
            "a convergence study needs an exact solution".into(),
        ));
    }
    let mut out: Vec<SolveReport<F>> = Vec::with_capacity(ns.len());
    for &n in ns {
        let mut report = solve(problem, scheme, n)?;
        if let Some(prev) = out.last() {
            let (e0, e1) = (
                prev.max_error.as_ref().map(Field::to_f64),
                report.max_error.as_ref().map(Field::to_f64),
            );
            if let (Some(e0), Some(e1)) = (e0, e1) {
                report.empirical_order =
                    Some((e0 / e1).ln() / (n as f64 / prev.n_intervals as f64).ln());
            }
        }
        out.push(report);
    }
    Ok(out)
}
