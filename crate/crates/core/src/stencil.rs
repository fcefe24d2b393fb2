//! Classical finite-difference stencils built from generator coefficients.
//!
//! Weight `k` multiplies the sample at offset `r - k` (in grid spacings) from
//! the evaluation point, so the leftmost weight belongs to the sample furthest
//! to the right. Compact stencils use `α = d` and the coefficients directly;
//! non-compact ones raise a lower-order generator to the integer power `α/d`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::explicit::{beta_coefficients, error_coefficients, ApproxParams};
use crate::poly::Poly;
use crate::scalar::Field;
use crate::series::poly_power_int;

/// The families of shift choices for compact formulas.
#[derive(Debug, Clone, PartialEq)]
pub enum StencilKind<F> {
    /// Backward formula, `r = 0`.
    Left,
    /// Forward formula, `r = p + d - 1`.
    Right,
    /// `r = (p + d - 1) / 2`; a half-integer here yields a staggered-central formula.
    Central,
    /// Any integer shift.
    Shifted(F),
    /// Any non-integer shift.
    Staggered(F),
}

/// A shift together with whether it leaves the stencil's own support.
#[derive(Debug, Clone, PartialEq)]
pub struct Shift<F> {
    pub r: F,
    /// `r < 0` or `r > p + d - 1`: the formula extrapolates. Legal, but worth a warning.
    pub extrapolative: bool,
}

pub fn shift_for_kind<F: Field>(kind: &StencilKind<F>, d: usize, p: usize) -> Result<Shift<F>> {
    if d == 0 || p == 0 {
        return Err(Error::InvalidParameter("d >= 1 and p >= 1 required".into()));
    }
    let last = F::from_usize(p + d - 1);
    let r = match kind {
        StencilKind::Left => F::zero(),
        StencilKind::Right => last.clone(),
        StencilKind::Central => last.clone() / F::from_i64(2),
        StencilKind::Shifted(r) => {
            if !r.is_integer() {
                return Err(Error::InvalidParameter(format!(
                    "shifted stencils need an integer r, got {r}"
                )));
            }
            r.clone()
        }
        StencilKind::Staggered(r) => {
            if r.is_integer() {
                return Err(Error::InvalidParameter(format!(
                    "staggered stencils need a non-integer r, got {r}"
                )));
            }
            r.clone()
        }
    };
    let extrapolative = r < F::zero() || r > last;
    Ok(Shift { r, extrapolative })
}

/// A classical difference formula: `D^α f(x) ≈ h^(-α) Σ_k w_k f(x + (r - k) h)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Stencil<F> {
    /// Classical derivative order.
    pub alpha: usize,
    pub d: usize,
    /// Accuracy order.
    pub p: usize,
    pub r: F,
    pub lambda: F,
    /// Offsets `r - k` from the evaluation point, in grid spacings.
    pub offsets: Vec<F>,
    pub weights: Vec<F>,
    /// Fractional part of `r`: zero exactly when the evaluation point is a grid point.
    pub eval_fraction: F,
    /// Coefficient `a_p` of `h^p D^(α+p) f` in the truncation error.
    pub leading_error: F,
    /// Order of the derivative in the leading error term, `α + p`.
    pub error_derivative_order: usize,
}

impl<F: Field> Stencil<F> {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Index `floor(r)` of the weight nearest the evaluation point from the
    /// right; it multiplies the sample at offset `eval_fraction`, which is the
    /// evaluation point itself for integer shifts. `None` when the shift lies
    /// outside the support.
    pub fn marked_index(&self) -> Option<usize> {
        if self.r < F::zero() {
            return None;
        }
        let k = self.r.floor().to_f64().round() as usize;
        (k < self.len()).then_some(k)
    }
}

fn build<F: Field>(alpha: usize, d: usize, p: usize, r: F, weights: Vec<F>) -> Result<Stencil<F>> {
    let params = ApproxParams::new(F::from_usize(alpha), d, p, r.clone())?;
    let cv = beta_coefficients(&params);
    let errors = error_coefficients(&cv, 1)?;
    let leading_error = errors.leading().cloned().unwrap_or_else(F::zero);
    let offsets = (0..weights.len())
        .map(|k| r.clone() - F::from_usize(k))
        .collect();
    Ok(Stencil {
        alpha,
        d,
        p,
        eval_fraction: r.clone() - r.floor(),
        lambda: params.lambda().clone(),
        r,
        offsets,
        weights,
        leading_error,
        error_derivative_order: alpha + p,
    })
}

/// The `p + d` point formula for the `d`-th derivative with shift `r`.
pub fn compact_stencil<F: Field>(d: usize, p: usize, r: F) -> Result<Stencil<F>> {
    let params = ApproxParams::new(F::from_usize(d), d, p, r.clone())?;
    let beta = beta_coefficients(&params).beta;
    build(d, d, p, r, beta)
}

/// The `γ (p + d - 1) + 1` point formula for `α = γ d`, `γ >= 2`.
pub fn noncompact_stencil<F: Field>(alpha: usize, d: usize, p: usize, r: F) -> Result<Stencil<F>> {
    if d == 0 || alpha % d != 0 {
        return Err(Error::InvalidParameter(format!(
            "alpha must be an integer multiple of d, got alpha {alpha} with d {d}"
        )));
    }
    let gamma = alpha / d;
    if gamma < 2 {
        return Err(Error::InvalidParameter(format!(
            "alpha / d >= 2 required for a non-compact formula, got {gamma}; use the compact form"
        )));
    }
    let params = ApproxParams::new(F::from_usize(alpha), d, p, r.clone())?;
    let base = Poly::new(beta_coefficients(&params).beta);
    let weights = poly_power_int(&base, gamma)?.into_coeffs();
    build(alpha, d, p, r, weights)
}

/// A source of function values.
pub trait Samples<F> {
    fn sample(&self, x: &F) -> Result<F>;
}

impl<F, G> Samples<F> for G
where
    G: Fn(&F) -> F,
{
    fn sample(&self, x: &F) -> Result<F> {
        Ok(self(x))
    }
}

/// Tabulated values `values[i] = f(x0 + i h)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSamples<F> {
    pub x0: F,
    pub h: F,
    pub values: Vec<F>,
}

impl<F: Field> Samples<F> for GridSamples<F> {
    fn sample(&self, x: &F) -> Result<F> {
        let pos = (x.clone() - self.x0.clone()) / self.h.clone();
        let nearest = (pos.clone() + F::one() / F::from_i64(2)).floor();
        let on_grid = if F::EXACT {
            pos.is_integer()
        } else {
            (pos.clone() - nearest.clone()).abs().to_f64() <= 1e-9
        };
        let index = nearest.to_f64();
        if !on_grid || index < 0.0 || index >= self.values.len() as f64 {
            return Err(Error::MissingSample(format!("no grid value at x = {x}")));
        }
        Ok(self.values[index as usize].clone())
    }
}

/// `h^(-α) Σ_k w_k f(x + offset_k h)`.
pub fn apply_stencil<F: Field>(
    st: &Stencil<F>,
    samples: &impl Samples<F>,
    x: &F,
    h: &F,
) -> Result<F> {
    if *h <= F::zero() {
        return Err(Error::InvalidParameter(format!("h > 0 required, got {h}")));
    }
    let mut acc = F::zero();
    for (w, off) in st.weights.iter().zip(&st.offsets) {
        if w.is_zero() {
            continue;
        }
        let at = x.clone() + off.clone() * h.clone();
        acc = acc + w.clone() * samples.sample(&at)?;
    }
    Ok(acc / h.powi(st.alpha as u32))
}

/// Text output formats shared by the command-line reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Human,
    Json,
    Csv,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "human" => Ok(RenderFormat::Human),
            "json" => Ok(RenderFormat::Json),
            "csv" => Ok(RenderFormat::Csv),
            other => Err(Error::Parse {
                text: other.to_string(),
                reason: "expected one of human, json, csv".into(),
            }),
        }
    }
}

impl fmt::Display for RenderFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RenderFormat::Human => "human",
            RenderFormat::Json => "json",
            RenderFormat::Csv => "csv",
        })
    }
}

#[derive(Serialize)]
struct StencilRecord {
    alpha: usize,
    d: usize,
    p: usize,
    r: String,
    lambda: String,
    offsets: Vec<String>,
    weights: Vec<String>,
    eval_fraction: String,
    leading_error: String,
    error_derivative_order: usize,
}

#[derive(Serialize)]
struct WeightRow {
    k: usize,
    offset: String,
    weight: String,
}

fn strings<F: Field>(v: &[F]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Human form lists the weights with the one at [`Stencil::marked_index`] in
/// parentheses (and appends the fractional part of `r` when non-zero); JSON is one record; CSV has one row per weight.
pub fn render_stencil<F: Field>(st: &Stencil<F>, format: RenderFormat) -> Result<String> {
    match format {
        RenderFormat::Human => {
            let marked = st.marked_index();
            let cells: Vec<String> = st
                .weights
                .iter()
                .enumerate()
                .map(|(k, w)| {
                    if Some(k) == marked {
                        format!("({w})")
                    } else {
                        w.to_string()
                    }
                })
                .collect();
            let mut out = format!("{} | error {}", cells.join(", "), st.leading_error);
            if !st.eval_fraction.is_zero() {
                out.push_str(&format!(" | eval_fraction {}", st.eval_fraction));
            }
            Ok(out)
        }
        RenderFormat::Json => {
            let record = StencilRecord {
                alpha: st.alpha,
                d: st.d,
                p: st.p,
                r: st.r.to_string(),
                lambda: st.lambda.to_string(),
                offsets: strings(&st.offsets),
                weights: strings(&st.weights),
                eval_fraction: st.eval_fraction.to_string(),
                leading_error: st.leading_error.to_string(),
                error_derivative_order: st.error_derivative_order,
            };
            serde_json::to_string_pretty(&record).map_err(|e| Error::Render(e.to_string()))
        }
        RenderFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for (k, (off, weight)) in st.offsets.iter().zip(&st.weights).enumerate() {
                w.serialize(WeightRow {
                    k,
                    offset: off.to_string(),
                    weight: weight.to_string(),
                })
                .map_err(|e| Error::Render(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Render(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Render(e.to_string()))
        }
    }
}
