use std::cell::{Cell, RefCell};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::DBig;
use dashu_int::{IBig, UBig};
use num_bigint::{BigInt, Sign};

use super::special::bernoulli;
use super::{Field, Rational, Real, Scalar};
use crate::error::{Error, Result};

pub const DEFAULT_DIGITS: usize = 50;
pub const MIN_DIGITS: usize = 15;

// Extra digits carried inside series evaluations.
const GUARD_DIGITS: usize = 10;

thread_local! {
    static WORKING_DIGITS: Cell<usize> = const { Cell::new(DEFAULT_DIGITS) };
    static PI_CACHE: RefCell<HashMap<usize, DBig>> = RefCell::new(HashMap::new());
}

/// Decimal digits used by values created on this thread.
pub fn working_digits() -> usize {
    WORKING_DIGITS.with(Cell::get)
}

/// Runs `f` with the working precision set to `digits`, restoring it afterwards.
pub fn with_digits<T>(digits: usize, f: impl FnOnce() -> T) -> Result<T> {
    if digits < MIN_DIGITS {
        return Err(Error::InvalidParameter(format!(
            "digits must be at least {MIN_DIGITS}, got {digits}"
        )));
    }
    struct Restore(usize);
    impl Drop for Restore {
        fn drop(&mut self) {
            WORKING_DIGITS.with(|w| w.set(self.0));
        }
    }
    let _restore = Restore(WORKING_DIGITS.with(|w| w.replace(digits)));
    Ok(f())
}

/// Arbitrary-precision decimal float. Each value carries its digit count;
/// binary operations round to the larger of the two.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct BigDecimal(DBig);

fn at(x: DBig, digits: usize) -> DBig {
    x.with_precision(digits).value()
}

fn to_ibig(v: &BigInt) -> IBig {
    let (sign, bytes) = v.to_bytes_le();
    let mag = IBig::from(UBig::from_le_bytes(&bytes));
    if sign == Sign::Minus {
        -mag
    } else {
        mag
    }
}

fn tiny(digits: usize) -> DBig {
    DBig::from_parts(IBig::from(1), -(digits as isize))
}

fn abs(x: &DBig) -> DBig {
    if *x < DBig::ZERO {
        -x.clone()
    } else {
        x.clone()
    }
}

impl BigDecimal {
    pub fn digits(&self) -> usize {
        self.0.precision()
    }

    pub fn inner(&self) -> &DBig {
        &self.0
    }

    pub fn from_f64(v: f64) -> Result<Self> {
        Rational::from_float(v)
            .map(|q| Self::from_rational(&q))
            .ok_or_else(|| Error::Parse {
                text: v.to_string(),
                reason: "not a finite number".into(),
            })
    }

    /// Scientific notation with `sig` significant digits, e.g. `2.02095e-17`.
    pub fn to_scientific(&self, sig: usize) -> String {
        if self.0 == DBig::ZERO {
            return "0".into();
        }
        let rounded = self.0.clone().with_precision(sig.max(1)).value();
        let repr = rounded.repr();
        let negative = *repr.significand() < IBig::ZERO;
        let digits = repr
            .significand()
            .to_string()
            .trim_start_matches('-')
            .to_string();
        let exponent = repr.exponent() + digits.len() as isize - 1;
        let (head, tail) = digits.split_at(1);
        let tail = tail.trim_end_matches('0');
        let sign = if negative { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{exponent}")
        } else {
            format!("{sign}{head}.{tail}e{exponent}")
        }
    }

    fn working(&self) -> usize {
        self.digits().max(MIN_DIGITS)
    }

    fn pi_at(digits: usize) -> DBig {
        if let Some(p) = PI_CACHE.with(|c| c.borrow().get(&digits).cloned()) {
            return p;
        }
        // Machin: π = 16 atan(1/5) - 4 atan(1/239)
        let w = digits + GUARD_DIGITS;
        let atan_inv = |n: i64| {
            let x = at(DBig::ONE, w) / at(DBig::from(n), w);
            let x2 = x.clone() * x.clone();
            let eps = tiny(w);
            let mut power = x.clone();
            let mut sum = x;
            let mut k: i64 = 1;
            loop {
                power = -(power * x2.clone());
                let term = power.clone() / at(DBig::from(2 * k + 1), w);
                if abs(&term) < eps {
                    break;
                }
                sum += term;
                k += 1;
            }
            sum
        };
        let pi = at(
            at(DBig::from(16), w) * atan_inv(5) - at(DBig::from(4), w) * atan_inv(239),
            digits,
        );
        PI_CACHE.with(|c| c.borrow_mut().insert(digits, pi.clone()));
        pi
    }

    /// Taylor sum Σ (-1)^n y^(2n+start) / (2n+start)! for |y| <= π/2.
    fn trig_series(y: &DBig, start: u32, w: usize) -> DBig {
        let y2 = y.clone() * y.clone();
        let eps = tiny(w);
        let mut term = if start == 0 {
            at(DBig::ONE, w)
        } else {
            y.clone()
        };
        let mut sum = term.clone();
        let mut n = u64::from(start);
        loop {
            let denom = at(DBig::from((n + 1) * (n + 2)), w);
            term = -(term * y2.clone()) / denom;
            if abs(&term) < eps {
                break;
            }
            sum += term.clone();
            n += 2;
        }
        sum
    }

    fn trig(&self, start: u32) -> Self {
        let digits = self.working();
        let w = digits + GUARD_DIGITS;
        let x = at(self.0.clone(), w);
        let pi = Self::pi_at(w);
        let k = (x.clone() / pi.clone()).round();
        let y = x - k.clone() * pi;
        let mut s = Self::trig_series(&y, start, w);
        let odd = k.to_int().value() % IBig::from(2) != IBig::ZERO;
        if odd {
            s = -s;
        }
        BigDecimal(at(s, digits))
    }

    fn ln_gamma_positive(&self) -> DBig {
        let digits = self.working();
        let w = digits + GUARD_DIGITS;
        let x = at(self.0.clone(), w);
        let shift_target = at(DBig::from((2 * w / 5 + 2) as u64), w);
        // Shift z = x + n upward so the asymptotic series converges to 10^-w.
        let mut z = x.clone();
        let mut product = at(DBig::ONE, w);
        while z < shift_target {
            product *= z.clone();
            z += at(DBig::ONE, w);
        }
        let half = at(DBig::ONE, w) / at(DBig::from(2), w);
        let two_pi = Self::pi_at(w) * at(DBig::from(2), w);
        let mut acc = (z.clone() - half.clone()) * z.ln() - z.clone() + half * two_pi.ln();
        let inv_z = at(DBig::ONE, w) / z.clone();
        let inv_z2 = inv_z.clone() * inv_z.clone();
        let mut power = inv_z;
        let eps = tiny(w);
        for k in 1..=(4 * w) {
            let b = bernoulli(2 * k);
            let coeff =
                Self::from_rational_at(&b, w) / at(DBig::from((2 * k * (2 * k - 1)) as u64), w);
            let term = coeff * power.clone();
            if abs(&term) < eps {
                break;
            }
            acc += term;
            power *= inv_z2.clone();
        }
        acc - product.ln()
    }

    fn from_rational_at(q: &Rational, digits: usize) -> DBig {
        at(DBig::from(to_ibig(q.numer())), digits) / at(DBig::from(to_ibig(q.denom())), digits)
    }
}

impl fmt::Display for BigDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for BigDecimal {
            type Output = BigDecimal;
            fn $method(self, rhs: BigDecimal) -> BigDecimal {
                BigDecimal(self.0 $op rhs.0)
            }
        }
    };
}

binary_op!(Add, add, +);
binary_op!(Sub, sub, -);
binary_op!(Mul, mul, *);
binary_op!(Div, div, /);

impl Neg for BigDecimal {
    type Output = BigDecimal;
    fn neg(self) -> BigDecimal {
        BigDecimal(-self.0)
    }
}

impl Field for BigDecimal {
    const NAME: &'static str = "big";
    const EXACT: bool = false;

    fn zero() -> Self {
        BigDecimal(at(DBig::ZERO, working_digits()))
    }
    fn one() -> Self {
        BigDecimal(at(DBig::ONE, working_digits()))
    }
    fn from_i64(v: i64) -> Self {
        BigDecimal(at(DBig::from(v), working_digits()))
    }
    fn from_rational(q: &Rational) -> Self {
        BigDecimal(Self::from_rational_at(q, working_digits()))
    }
    fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }
    fn floor(&self) -> Self {
        BigDecimal(self.0.floor())
    }
    fn is_zero(&self) -> bool {
        self.0 == DBig::ZERO
    }

    fn pow_exponent(&self, exponent: &Self) -> Result<Self> {
        if exponent.is_integer() {
            let n = exponent.0.to_int().value();
            let n = i32::try_from(n)
                .map_err(|_| Error::InvalidParameter(format!("exponent {exponent} too large")))?;
            return super::powi_signed(self, n);
        }
        if self.0 <= DBig::ZERO {
            return Err(Error::NonPositiveBase(self.to_scientific(20)));
        }
        Ok(self.powf(exponent))
    }

    fn pivot_tolerance() -> Self {
        let digits = working_digits();
        BigDecimal(at(tiny(digits.saturating_sub(4)), digits))
    }

    fn into_scalar(self) -> Scalar {
        Scalar::BigDecimal(self)
    }

    fn from_scalar(s: &Scalar) -> Result<Self> {
        match s {
            Scalar::BigDecimal(b) => Ok(b.clone()),
            Scalar::Rational(q) => Ok(Self::from_rational(q)),
            other => Err(Error::MixedRealizations(Self::NAME, other.realization())),
        }
    }
}

impl Real for BigDecimal {
    fn pi() -> Self {
        BigDecimal(Self::pi_at(working_digits()))
    }
    fn exp(&self) -> Self {
        BigDecimal(at(self.0.clone(), self.working()).exp())
    }
    fn ln(&self) -> Self {
        BigDecimal(at(self.0.clone(), self.working()).ln())
    }
    fn sin(&self) -> Self {
        self.trig(1)
    }
    fn cos(&self) -> Self {
        self.trig(0)
    }
    fn sqrt(&self) -> Self {
        BigDecimal(at(self.0.clone(), self.working()).sqrt())
    }
    fn powf(&self, exponent: &Self) -> Self {
        let w = self.working().max(exponent.working());
        BigDecimal(at(self.0.clone(), w).powf(&at(exponent.0.clone(), w)))
    }

    fn gamma(&self) -> Self {
        let digits = self.working();
        let half = BigDecimal(at(DBig::ONE, digits) / at(DBig::from(2), digits));
        if *self < half {
            // Reflection: Γ(x) = π / (sin(πx) Γ(1-x))
            let pi = BigDecimal(Self::pi_at(digits));
            let one = BigDecimal(at(DBig::ONE, digits));
            let s = (pi.clone() * self.clone()).sin();
            assert!(!s.is_zero(), "gamma pole at {self}");
            return pi / (s * (one - self.clone()).gamma());
        }
        let lg = Self::ln_gamma_positive(self);
        BigDecimal(at(lg.exp(), digits))
    }
}
