//! Closed-form generator coefficients.
//!
//! For a derivative of order `α`, base order `d`, accuracy `p` and shift `r`
//! the generator polynomial has `N = p + d` coefficients
//!
//! ```text
//! β_j = N_j / D_j,   λ = r d / α,
//! N_j = S({λ - k : k ≠ j}, p - 1)            (elementary symmetric polynomial)
//! D_j = (-1)^(p-1-j) j! (N-1-j)! / d!
//! ```
//!
//! and satisfies `Σ_j (λ - j)^k β_j = d! δ_{d,k}` for `k < N`. Denominators do
//! not depend on `α` or `r` and are cached per `(d, p)`; numerators are built by
//! sliding one factor at a time through the product `Π (x + λ - k)`, O(N²) work.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::oracle::OpCount;
use crate::poly::Poly;
use crate::scalar::{Field, Rational};

/// The quadruple `(α, d, p, r)` with its derived `λ` and `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxParams<F> {
    alpha: F,
    d: usize,
    p: usize,
    r: F,
    lambda: F,
    n_coeffs: usize,
}

impl<F: Field> ApproxParams<F> {
    pub fn new(alpha: F, d: usize, p: usize, r: F) -> Result<Self> {
        if alpha <= F::zero() {
            return Err(Error::InvalidParameter(format!(
                "alpha > 0 required, got {alpha}"
            )));
        }
        if d == 0 {
            return Err(Error::InvalidParameter("d >= 1 required, got 0".into()));
        }
        if p == 0 {
            return Err(Error::InvalidParameter("p >= 1 required, got 0".into()));
        }
        let lambda = r.clone() * F::from_usize(d) / alpha.clone();
        Ok(ApproxParams {
            alpha,
            d,
            p,
            r,
            lambda,
            n_coeffs: p + d,
        })
    }

    pub fn alpha(&self) -> &F {
        &self.alpha
    }
    pub fn d(&self) -> usize {
        self.d
    }
    pub fn p(&self) -> usize {
        self.p
    }
    pub fn r(&self) -> &F {
        &self.r
    }
    /// `λ = r d / α`.
    pub fn lambda(&self) -> &F {
        &self.lambda
    }
    /// `N = p + d`.
    pub fn n_coeffs(&self) -> usize {
        self.n_coeffs
    }
    /// The generator exponent `γ = α / d`.
    pub fn gamma(&self) -> F {
        self.alpha.clone() / F::from_usize(self.d)
    }

    /// Shifted abscissae `λ - k`, `k = 0..N`.
    pub fn nodes(&self) -> Vec<F> {
        (0..self.n_coeffs)
            .map(|k| self.lambda.clone() - F::from_usize(k))
            .collect()
    }
}

pub fn derive_params<F: Field>(alpha: F, d: usize, p: usize, r: F) -> Result<ApproxParams<F>> {
    ApproxParams::new(alpha, d, p, r)
}

type DenominatorCache = Mutex<HashMap<(usize, usize), Arc<[Rational]>>>;

fn denominator_cache() -> &'static DenominatorCache {
    static CACHE: OnceLock<DenominatorCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exact denominators `D_0..D_{N-1}` for `(d, p)`, computed once and shared.
pub fn denominators_exact(d: usize, p: usize) -> Arc<[Rational]> {
    assert!(d >= 1 && p >= 1, "denominators need d >= 1 and p >= 1");
    let mut cache = denominator_cache()
        .lock()
        .expect("denominator cache poisoned");
    cache
        .entry((d, p))
        .or_insert_with(|| {
            let n = p + d;
            let int = |v: usize| Rational::from_integer(BigInt::from(v));
            let mut out = Vec::with_capacity(n);
            // D_0 = Π_{m=d+1}^{N-1} (-m)
            let d0 = (d + 1..n).fold(int(1), |acc, m| acc * -int(m));
            out.push(d0);
            for j in 1..n {
                let next = -int(j) / int(n - j) * out[j - 1].clone();
                out.push(next);
            }
            out.into()
        })
        .clone()
}

pub fn denominators<F: Field>(d: usize, p: usize) -> Vec<F> {
    denominators_exact(d, p)
        .iter()
        .map(F::from_rational)
        .collect()
}

/// Numerators `N_j = S(X_j, p - 1)` with `X_j = {λ - k : k ≠ j}`.
pub fn numerators<F: Field>(params: &ApproxParams<F>) -> Vec<F> {
    numerators_tallied(params).0
}

/// [`numerators`] together with the number of field operations performed.
///
/// Terms whose operand lies outside the coefficient vector (`p_{-1}`, `p_N`,
/// `q_N`) are skipped and not counted.
pub fn numerators_tallied<F: Field>(params: &ApproxParams<F>) -> (Vec<F>, OpCount) {
    let n = params.n_coeffs();
    let d = params.d();
    let x = params.nodes();
    let mut ops = OpCount::default();
    let mut out = Vec::with_capacity(n);

    // M_0(x) = Π_{m=1}^{N-1} (x + x_m)
    let mut p = expand_product(&x[1..], &mut ops);
    out.push(p[d].clone());

    // M_j = M_{j-1} (x + x_{j-1}) / (x + x_j)
    let mut q = vec![F::zero(); n];
    for j in 1..n {
        for k in (0..n).rev() {
            q[k] = if k + 1 < n {
                ops.additions += 2;
                ops.multiplications += 2;
                p[k].clone() + x[j - 1].clone() * p[k + 1].clone() - x[j].clone() * q[k + 1].clone()
            } else {
                p[k].clone()
            };
        }
        std::mem::swap(&mut p, &mut q);
        out.push(p[d].clone());
    }
    (out, ops)
}

/// Coefficients of `Π_m (x + xs[m])`, lowest degree first, built one factor at
/// a time. The coefficient of `x^k` is `S(xs, |xs| - k)`.
fn expand_product<F: Field>(xs: &[F], ops: &mut OpCount) -> Vec<F> {
    let mut p = vec![F::zero(); xs.len() + 1];
    p[0] = F::one();
    for (m, xm) in xs.iter().enumerate() {
        for k in (0..=m + 1).rev() {
            let scaled = xm.clone() * p[k].clone();
            ops.multiplications += 1;
            p[k] = if k > 0 {
                ops.additions += 1;
                p[k - 1].clone() + scaled
            } else {
                scaled
            };
        }
    }
    p
}

/// All elementary symmetric polynomials `S(xs, 0..=|xs|)` by the
/// factor-by-factor recurrence, O(|xs|²) work.
pub fn elementary_symmetric<F: Field>(xs: &[F]) -> Vec<F> {
    let mut coeffs = expand_product(xs, &mut OpCount::default());
    coeffs.reverse();
    coeffs
}

/// `β_0..β_{N-1}` with the numerator/denominator split that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector<F> {
    pub params: ApproxParams<F>,
    pub beta: Vec<F>,
    pub numerators: Vec<F>,
    pub denominators: Vec<F>,
}

impl<F: Field> CoefficientVector<F> {
    pub fn len(&self) -> usize {
        self.beta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beta.is_empty()
    }

    /// `Σ_j (λ - j)^k β_j`.
    pub fn power_sum(&self, k: u32) -> F {
        self.params
            .nodes()
            .iter()
            .zip(&self.beta)
            .fold(F::zero(), |acc, (x, b)| acc + x.powi(k) * b.clone())
    }
}

pub fn beta_coefficients<F: Field>(params: &ApproxParams<F>) -> CoefficientVector<F> {
    let numerators = numerators(params);
    let denominators = denominators::<F>(params.d(), params.p());
    let beta = numerators
        .iter()
        .zip(&denominators)
        .map(|(n, d)| n.clone() / d.clone())
        .collect();
    CoefficientVector {
        params: params.clone(),
        beta,
        numerators,
        denominators,
    }
}

/// Coefficients `a_m` of `h^m D^(α+m) f` in the truncation error, `m = p..`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorCoefficients<F> {
    pub params: ApproxParams<F>,
    pub coefficients: BTreeMap<usize, F>,
}

impl<F: Field> ErrorCoefficients<F> {
    pub fn get(&self, m: usize) -> Option<&F> {
        self.coefficients.get(&m)
    }

    /// `a_p`, when requested.
    pub fn leading(&self) -> Option<&F> {
        self.get(self.params.p())
    }

    /// The leading term vanishes: the formula is more accurate than order `p`.
    pub fn is_superconvergent(&self) -> bool {
        self.leading().is_some_and(Field::is_zero)
    }
}

/// `a_m = (α/d) / (m+d)! · Σ_j (λ - j)^(m+d) β_j` for `m = p..p+count`.
///
/// Beyond `2p - 1` the expansion picks up cross terms that are not modelled,
/// so `count > p` is rejected.
pub fn error_coefficients<F: Field>(
    cv: &CoefficientVector<F>,
    count: usize,
) -> Result<ErrorCoefficients<F>> {
    let p = cv.params.p();
    let d = cv.params.d();
    if count > p {
        return Err(Error::InvalidParameter(format!(
            "count <= p required for error coefficients, got count {count} with p {p}"
        )));
    }
    let gamma = cv.params.gamma();
    let coefficients = (p..p + count)
        .map(|m| {
            let order = m + d;
            let moment = cv.power_sum(order as u32) / F::factorial(order);
            (m, gamma.clone() * moment)
        })
        .collect();
    Ok(ErrorCoefficients {
        params: cv.params.clone(),
        coefficients,
    })
}

/// `P(z) = Σ β_j z^j`; the generator itself is `P(z)^(α/d)`.
pub fn generator_polynomial<F: Field>(cv: &CoefficientVector<F>) -> Poly<F> {
    Poly::new(cv.beta.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }
    fn qs(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(n, d)| q(n, d)).collect()
    }
    fn params(alpha: Rational, d: usize, p: usize, r: Rational) -> ApproxParams<Rational> {
        ApproxParams::new(alpha, d, p, r).unwrap()
    }

    #[test]
    fn derived_lambda_and_size() {
        let p = params(q(2, 1), 2, 4, q(1, 1));
        assert_eq!(p.lambda(), &q(1, 1));
        assert_eq!(p.n_coeffs(), 6);
        let p = params(q(1, 1), 1, 1, q(0, 1));
        assert_eq!(p.lambda(), &q(0, 1));
        assert_eq!(p.n_coeffs(), 2);
        let p = params(q(2, 1), 2, 4, q(3, 2));
        assert_eq!(p.lambda(), &q(3, 2));
        assert_eq!(p.gamma(), q(1, 1));
    }

    #[test]
    fn rejects_bad_params() {
        assert!(ApproxParams::new(q(0, 1), 1, 1, q(0, 1)).is_err());
        assert!(ApproxParams::new(q(-1, 2), 1, 1, q(0, 1)).is_err());
        assert!(ApproxParams::new(q(1, 1), 0, 1, q(0, 1)).is_err());
        let err = ApproxParams::new(q(1, 1), 1, 0, q(0, 1)).unwrap_err();
        assert!(err.to_string().contains("p >= 1"));
    }

    #[test]
    fn denominator_recursion() {
        // Closed form (-1)^(p-1-j) j! (N-1-j)! / d!
        assert_eq!(
            &*denominators_exact(1, 2),
            &qs(&[(-2, 1), (1, 1), (-2, 1)])[..]
        );
        assert_eq!(
            &*denominators_exact(2, 3),
            &qs(&[(12, 1), (-3, 1), (2, 1), (-3, 1), (12, 1)])[..]
        );
        assert_eq!(&*denominators_exact(1, 1), &qs(&[(1, 1), (-1, 1)])[..]);
    }

    #[test]
    fn numerator_examples() {
        let n = numerators(&params(q(1, 1), 1, 2, q(0, 1)));
        assert_eq!(n[0], q(-3, 1));
        let n = numerators(&params(q(2, 1), 2, 3, q(0, 1)));
        assert_eq!(n[4], q(11, 1));
        let n = numerators(&params(q(1, 1), 1, 1, q(7, 3)));
        assert_eq!(n, qs(&[(1, 1), (1, 1)]));
    }

    #[test]
    fn beta_examples() {
        let cv = beta_coefficients(&params(q(3, 1), 3, 4, q(3, 1)));
        assert_eq!(
            cv.beta,
            qs(&[(-1, 8), (1, 1), (-13, 8), (0, 1), (13, 8), (-1, 1), (1, 8)])
        );
        let cv = beta_coefficients(&params(q(2, 1), 1, 3, q(1, 1)));
        assert_eq!(cv.beta, qs(&[(23, 24), (-7, 8), (-1, 8), (1, 24)]));
        let cv = beta_coefficients(&params(q(4, 5), 1, 2, q(1, 1)));
        assert_eq!(cv.params.lambda(), &q(5, 4));
        assert_eq!(cv.beta, qs(&[(1, 4), (1, 2), (-3, 4)]));
        for (b, (n, d)) in cv
            .beta
            .iter()
            .zip(cv.numerators.iter().zip(&cv.denominators))
        {
            assert_eq!(b.clone() * d.clone(), n.clone());
        }
    }

    #[test]
    fn error_examples() {
        let lead = |alpha: Rational, d, p, r: Rational| {
            let cv = beta_coefficients(&params(alpha, d, p, r));
            error_coefficients(&cv, 1)
                .unwrap()
                .leading()
                .unwrap()
                .clone()
        };
        assert_eq!(lead(q(1, 1), 1, 3, q(0, 1)), q(-1, 4));
        assert_eq!(lead(q(3, 1), 3, 4, q(3, 1)), q(-7, 120));
        assert_eq!(lead(q(2, 1), 2, 4, q(3, 2)), q(341, 5760));
        assert_eq!(lead(q(2, 1), 1, 3, q(1, 1)), q(1, 12));

        let cv = beta_coefficients(&params(q(1, 1), 1, 3, q(0, 1)));
        let all = error_coefficients(&cv, 3).unwrap();
        assert_eq!(all.coefficients.len(), 3);
        assert!(matches!(
            error_coefficients(&cv, 4),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn generator_examples() {
        let cv = beta_coefficients(&params(q(1, 1), 1, 1, q(0, 1)));
        assert_eq!(
            generator_polynomial(&cv).coeffs(),
            &qs(&[(1, 1), (-1, 1)])[..]
        );
        let cv = beta_coefficients(&params(q(5, 7), 1, 2, q(0, 1)));
        assert_eq!(
            generator_polynomial(&cv).coeffs(),
            &qs(&[(3, 2), (-2, 1), (1, 2)])[..]
        );
        // d = 2, p = 2: (2-λ) + (3λ-5) z + (4-3λ) z² + (λ-1) z³, here λ = 1/2
        let cv = beta_coefficients(&params(q(2, 1), 2, 2, q(1, 2)));
        assert_eq!(cv.beta, qs(&[(3, 2), (-7, 2), (5, 2), (-1, 2)]));
    }

    #[test]
    fn float_fields_agree_with_exact() {
        let exact = beta_coefficients(&params(q(8, 5), 2, 3, q(1, 1)));
        let float = beta_coefficients(&ApproxParams::new(1.6f64, 2, 3, 1.0).unwrap());
        for (a, b) in exact.beta.iter().zip(&float.beta) {
            assert!((a.to_f64() - b).abs() < 1e-13);
        }
    }

    #[test]
    fn symmetric_polynomials_by_recurrence() {
        let xs = qs(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(
            elementary_symmetric(&xs),
            qs(&[(1, 1), (6, 1), (11, 1), (6, 1)])
        );
        assert_eq!(elementary_symmetric::<Rational>(&[]), qs(&[(1, 1)]));
    }

    #[test]
    fn efficient_tally_stays_small() {
        let (_, ops) = numerators_tallied(&ApproxParams::new(10.0f64, 10, 10, 0.0).unwrap());
        assert!(ops.additions <= 1000, "{ops:?}");
        // 190 + 722 additions, 209 + 722 multiplications
        assert_eq!(
            ops,
            OpCount {
                additions: 912,
                multiplications: 931
            }
        );
    }
}
