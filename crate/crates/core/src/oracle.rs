//! Brute-force reference implementations.
//!
//! Nothing here shares code with [`crate::explicit`]: coefficients come from
//! eliminating the Vandermonde system or from Cramer's rule with the
//! closed-form determinants, and symmetric polynomials are summed over every
//! combination. These are slow on purpose and serve as test oracles and as the
//! baseline for the operation-count comparison.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::explicit::{ApproxParams, CoefficientVector};
use crate::scalar::Field;

/// Tally of field additions (and subtractions) and multiplications.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct OpCount {
    pub additions: u64,
    pub multiplications: u64,
}

/// Default cap on `M·N` for [`numerators_direct`].
pub const DEFAULT_OP_BUDGET: u128 = 100_000_000;

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Calls `f` with every strictly increasing `k`-subset of `0..n`.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for t in i + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// `S(X, k)`: sum over all `k`-combinations of the product of the chosen elements.
pub fn esp_direct<F: Field>(xs: &[F], k: usize) -> Result<F> {
    if k > xs.len() {
        return Err(Error::InvalidParameter(format!(
            "0 <= k <= |xs| required, got k = {k} with |xs| = {}",
            xs.len()
        )));
    }
    let mut sum = F::zero();
    for_each_combination(xs.len(), k, |idx| {
        let term = idx.iter().fold(F::one(), |acc, &i| acc * xs[i].clone());
        sum = sum.clone() + term;
    });
    Ok(sum)
}

/// Numerators by full enumeration, with the tally of operations spent.
///
/// Each of the `M = C(N-1, p-1)` terms of every `N_j` costs `p - 1`
/// multiplications (starting from one) and one addition into the sum.
/// Refuses when `M·N` exceeds `budget`.
pub fn numerators_direct<F: Field>(
    params: &ApproxParams<F>,
    budget: u128,
) -> Result<(Vec<F>, OpCount)> {
    let n = params.n_coeffs();
    let k = params.p() - 1;
    let required = binomial(n - 1, k) * n as u128;
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let nodes = params.nodes();
    let mut ops = OpCount::default();
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let others: Vec<F> = nodes
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != j)
            .map(|(_, x)| x.clone())
            .collect();
        let mut sum = F::zero();
        for_each_combination(others.len(), k, |idx| {
            let mut term = F::one();
            for &i in idx {
                term = term * others[i].clone();
                ops.multiplications += 1;
            }
            sum = sum.clone() + term;
            ops.additions += 1;
        });
        out.push(sum);
    }
    Ok((out, ops))
}

/// Row `k`, column `j` holds `nodes[j]^k`.
pub fn vandermonde_matrix<F: Field>(nodes: &[F]) -> Vec<Vec<F>> {
    (0..nodes.len())
        .map(|k| nodes.iter().map(|x| x.powi(k as u32)).collect())
        .collect()
}

/// Vandermonde variant with rows `x^0..x^(k-1), x^(k+1)..x^(q+1)`.
pub fn variant_vandermonde<F: Field>(nodes: &[F], k: usize) -> Vec<Vec<F>> {
    let q = nodes.len().saturating_sub(1);
    (0..=q + 1)
        .filter(|&row| row != k)
        .map(|row| nodes.iter().map(|x| x.powi(row as u32)).collect())
        .collect()
}

fn pick_pivot<F: Field>(a: &[Vec<F>], col: usize) -> Option<usize> {
    if F::EXACT {
        (col..a.len()).find(|&r| !a[r][col].is_zero())
    } else {
        (col..a.len())
            .max_by(|&x, &y| {
                a[x][col]
                    .abs()
                    .partial_cmp(&a[y][col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .filter(|&r| !a[r][col].is_zero())
    }
}

/// Determinant by Gaussian elimination.
pub fn determinant<F: Field>(mut a: Vec<Vec<F>>) -> F {
    let n = a.len();
    let mut det = F::one();
    for col in 0..n {
        let Some(piv) = pick_pivot(&a, col) else {
            return F::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det = det * pivot.clone();
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let factor = a[row][col].clone() / pivot.clone();
            for c in col..n {
                let v = a[row][c].clone() - factor.clone() * a[col][c].clone();
                a[row][c] = v;
            }
        }
    }
    det
}

fn eliminate<F: Field>(mut a: Vec<Vec<F>>, mut b: Vec<F>) -> Result<Vec<F>> {
    let n = a.len();
    for col in 0..n {
        let piv = pick_pivot(&a, col).ok_or(Error::Singular(col))?;
        a.swap(piv, col);
        b.swap(piv, col);
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let factor = a[row][col].clone() / a[col][col].clone();
            for c in col..n {
                let v = a[row][c].clone() - factor.clone() * a[col][c].clone();
                a[row][c] = v;
            }
            b[row] = b[row].clone() - factor * b[col].clone();
        }
    }
    let mut x = vec![F::zero(); n];
    for row in (0..n).rev() {
        let tail = (row + 1..n).fold(F::zero(), |acc, c| acc + a[row][c].clone() * x[c].clone());
        x[row] = (b[row].clone() - tail) / a[row][row].clone();
    }
    Ok(x)
}

fn consistency_rhs<F: Field>(n: usize, d: usize) -> Vec<F> {
    let mut rhs = vec![F::zero(); n];
    rhs[d] = F::factorial(d);
    rhs
}

/// Solves `Σ_j (λ - j)^k β_j = d! δ_{d,k}` by Gaussian elimination.
pub fn vandermonde_solve<F: Field>(params: &ApproxParams<F>) -> Result<Vec<F>> {
    let nodes = params.nodes();
    let rhs = consistency_rhs(nodes.len(), params.d());
    eliminate(vandermonde_matrix(&nodes), rhs)
}

/// Same system by Cramer's rule with the closed-form determinants
/// `|V_j(d)| = (-1)^(j+d) d! Π_{m>n; m,n≠j} (λ_m - λ_n) S(X_j, p-1)`.
pub fn vandermonde_cramer<F: Field>(params: &ApproxParams<F>) -> Result<Vec<F>> {
    let nodes = params.nodes();
    let n = nodes.len();
    let d = params.d();
    let vdm = |skip: Option<usize>| {
        let mut prod = F::one();
        for m in 0..n {
            for k in 0..m {
                if Some(m) != skip && Some(k) != skip {
                    prod = prod * (nodes[m].clone() - nodes[k].clone());
                }
            }
        }
        prod
    };
    let full = vdm(None);
    (0..n)
        .map(|j| {
            let others: Vec<F> = (0..n)
                .filter(|&m| m != j)
                .map(|m| nodes[m].clone())
                .collect();
            let sign = if (j + d) % 2 == 0 {
                F::one()
            } else {
                -F::one()
            };
            let numer =
                sign * F::factorial(d) * vdm(Some(j)) * esp_direct(&others, params.p() - 1)?;
            Ok(numer / full.clone())
        })
        .collect()
}

/// `b_k = (1/k!) Σ_j (λ - j)^k β_j` for `k = 0..=k_max`.
///
/// A valid order-`p` vector has `b_k = δ_{d,k}` for every `k < N`.
pub fn consistency_moments<F: Field>(cv: &CoefficientVector<F>, k_max: usize) -> Vec<F> {
    (0..=k_max)
        .map(|k| cv.power_sum(k as u32) / F::factorial(k))
        .collect()
}
