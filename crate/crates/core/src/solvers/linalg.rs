//! Dense matrices and a direct solver that works over every field.

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> DenseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("rows of unequal length".into()));
        }
        Ok(DenseMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: F) {
        let k = i * self.cols + j;
        self.data[k] = self.data[k].clone() + v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[F]) -> Result<Vec<F>> {
        if x.len() != self.cols {
            return Err(Error::Dimension(format!(
                "matrix has {} columns, vector has {} entries",
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }
}

/// Solves `A x = b`.
///
/// Exact fields take the first non-zero pivot, so the answer is exact and the
/// only failure is a genuinely singular matrix. Inexact fields use partial
/// pivoting and report singularity when the best pivot is below
/// `F::pivot_tolerance()` times the largest entry of `A`.
pub fn solve_dense<F: Field>(a: &DenseMatrix<F>, b: &[F]) -> Result<Vec<F>> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::Dimension(format!(
            "matrix is {}x{}, not square",
            n,
            a.cols()
        )));
    }
    if b.len() != n {
        return Err(Error::Dimension(format!(
            "matrix has {n} rows, right-hand side has {} entries",
            b.len()
        )));
    }
    let mut m = a.data.clone();
    let mut x = b.to_vec();
    let threshold = if F::EXACT {
        F::zero()
    } else {
        let scale = m
            .iter()
            .map(Field::abs)
            .fold(F::zero(), |acc, v| if v > acc { v } else { acc });
        scale * F::pivot_tolerance()
    };

    for col in 0..n {
        let piv = if F::EXACT {
            (col..n).find(|&r| !m[r * n + col].is_zero())
        } else {
            let best = (col..n)
                .max_by(|&r, &s| {
                    m[r * n + col]
                        .abs()
                        .partial_cmp(&m[s * n + col].abs())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
                .expect("non-empty pivot range");
            (m[best * n + col].abs() > threshold).then_some(best)
        };
        let piv = piv.ok_or(Error::Singular(col))?;
        if piv != col {
            for c in 0..n {
                m.swap(piv * n + c, col * n + c);
            }
            x.swap(piv, col);
        }
        let pivot = m[col * n + col].clone();
        for row in col + 1..n {
            let lead = &m[row * n + col];
            if lead.is_zero() {
                continue;
            }
            let factor = lead.clone() / pivot.clone();
            for c in col + 1..n {
                let v = m[row * n + c].clone() - factor.clone() * m[col * n + c].clone();
                m[row * n + c] = v;
            }
            m[row * n + col] = F::zero();
            x[row] = x[row].clone() - factor * x[col].clone();
        }
    }
    for row in (0..n).rev() {
        let mut acc = x[row].clone();
        for c in row + 1..n {
            acc = acc - m[row * n + c].clone() * x[c].clone();
        }
        x[row] = acc / m[row * n + row].clone();
    }
    Ok(x)
}
