use std::cell::RefCell;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

// g = 7, n = 9 coefficient set.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

pub(crate) fn lanczos_gamma(x: f64) -> f64 {
    use std::f64::consts::PI;
    if x < 0.5 {
        return PI / ((PI * x).sin() * lanczos_gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
}

thread_local! {
    static BERNOULLI: RefCell<Vec<Rational>> = RefCell::new(vec![Rational::one()]);
}

/// Bernoulli number `B_n` (convention `B_1 = -1/2`), memoized per thread.
pub(crate) fn bernoulli(n: usize) -> Rational {
    BERNOULLI.with(|cache| {
        let mut b = cache.borrow_mut();
        while b.len() <= n {
            let m = b.len();
            // B_m = -1/(m+1) Σ_{k<m} C(m+1, k) B_k
            let mut binom = BigInt::one();
            let mut sum = Rational::zero();
            for (k, bk) in b.iter().enumerate() {
                sum += Rational::from_integer(binom.clone()) * bk;
                binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
            }
            b.push(-sum / Rational::from_integer(BigInt::from(m + 1)));
        }
        b[n].clone()
    })
}
