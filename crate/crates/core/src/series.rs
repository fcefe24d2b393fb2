//! Weight series of generators: Grünwald binomial weights, fractional powers
//! of a polynomial by the J.C.P. Miller recurrence, exact integer powers, and
//! the unit-disk convergence diagnostic for the shifted second-order family.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::explicit::CoefficientVector;
use crate::poly::Poly;
use crate::scalar::Field;

/// Truncated expansion `w_0..w_{K-1}` of `P(z)^γ`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSeries<F> {
    pub gamma: F,
    pub base: Vec<F>,
    pub weights: Vec<F>,
}

impl<F: Field> WeightSeries<F> {
    /// The truncation length `K`.
    pub fn truncation(&self) -> usize {
        self.weights.len()
    }
}

/// Coefficients of `(1 - z)^α`: `g_0 = 1`, `g_k = g_{k-1} (k - 1 - α) / k`.
pub fn grunwald_weights<F: Field>(alpha: &F, k: usize) -> Result<Vec<F>> {
    if k == 0 {
        return Err(Error::InvalidParameter("K >= 1 required, got 0".into()));
    }
    let mut out = Vec::with_capacity(k);
    out.push(F::one());
    for m in 1..k {
        let prev = out[m - 1].clone();
        out.push(prev * (F::from_usize(m - 1) - alpha.clone()) / F::from_usize(m));
    }
    Ok(out)
}

/// `P(z)^γ` to `K` terms by the J.C.P. Miller recurrence
///
/// ```text
/// w_0 = β_0^γ,
/// w_m = 1/(m β_0) Σ_{k=1}^{min(m, N-1)} (k(γ+1) - m) β_k w_{m-k}.
/// ```
///
/// The divisor is the constant term of the base polynomial; only that reading
/// reproduces the convolution square of a polynomial. In exact arithmetic
/// `β_0^γ` must itself be rational, otherwise [`Error::InexactPower`] is
/// returned instead of silently rounding.
pub fn miller_expand<F: Field>(base: &[F], gamma: &F, k: usize) -> Result<WeightSeries<F>> {
    if k == 0 {
        return Err(Error::InvalidParameter("K >= 1 required, got 0".into()));
    }
    let b0 = base.first().ok_or(Error::ZeroLeadingCoefficient)?;
    if b0.is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let mut weights = Vec::with_capacity(k);
    weights.push(b0.pow_exponent(gamma)?);
    let g1 = gamma.clone() + F::one();
    for m in 1..k {
        let top = m.min(base.len() - 1);
        let mf = F::from_usize(m);
        let mut acc = F::zero();
        for j in 1..=top {
            if base[j].is_zero() {
                continue;
            }
            let factor = F::from_usize(j) * g1.clone() - mf.clone();
            acc = acc + factor * base[j].clone() * weights[m - j].clone();
        }
        weights.push(acc / (mf * b0.clone()));
    }
    Ok(WeightSeries {
        gamma: gamma.clone(),
        base: base.to_vec(),
        weights,
    })
}

/// `P(z)^γ` for integer `γ >= 1` by repeated convolution.
pub fn poly_power_int<F: Field>(base: &Poly<F>, gamma: usize) -> Result<Poly<F>> {
    if gamma == 0 {
        return Err(Error::InvalidParameter("gamma >= 1 required, got 0".into()));
    }
    let mut out = base.clone();
    for _ in 1..gamma {
        out = out.mul(base);
    }
    Ok(out)
}

/// Outcome of the ratio test `|β_{N-1} / β_0| < 1` with `β_0 > 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceDiagnostic {
    pub beta0_positive: bool,
    pub edge_ratio: f64,
    pub converges_on_unit_disk: bool,
    /// Set when the generator is outside the `(d, p) = (2, 2)` family, where
    /// the ratio test is not backed by a factorization argument.
    pub advisory: bool,
}

/// Ratio test for real convergence of `P(z)^γ` on the closed unit disk.
pub fn convergence_diagnostic<F: Field>(
    cv: &CoefficientVector<F>,
) -> Result<ConvergenceDiagnostic> {
    let b0 = &cv.beta[0];
    if b0.is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let last = &cv.beta[cv.len() - 1];
    let ratio = (last.clone() / b0.clone()).abs();
    let beta0_positive = *b0 > F::zero();
    Ok(ConvergenceDiagnostic {
        beta0_positive,
        edge_ratio: ratio.to_f64(),
        converges_on_unit_disk: beta0_positive && ratio < F::one(),
        advisory: !(cv.params.d() == 2 && cv.params.p() == 2),
    })
}
