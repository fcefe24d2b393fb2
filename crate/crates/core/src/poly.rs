use std::fmt;

use crate::scalar::Field;

/// Dense univariate polynomial, coefficients in increasing degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        Poly { coeffs }
    }

    pub fn one() -> Self {
        Poly::new(vec![F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Number of stored coefficients (degree + 1, trailing zeros included).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, z: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * z.clone() + c.clone())
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Poly<F>) -> Poly<F> {
        if self.is_empty() || other.is_empty() {
            return Poly::new(Vec::new());
        }
        let mut out = vec![F::zero(); self.len() + other.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && self.coeffs.len() > 1 {
                continue;
            }
            let text = c.to_string();
            let (sign, mag) = match text.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", text),
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => f.write_str(&mag)?,
                1 => write!(f, "{mag} z")?,
                _ => write!(f, "{mag} z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
