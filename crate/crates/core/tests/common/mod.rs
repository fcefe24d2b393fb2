//! Reference tables shared by the integration tests.
//!
//! Symbolic coefficient rows are stored as polynomials in `λ`, constant term
//! first, and compared by evaluation at sampled rational `λ`.

#![allow(dead_code)]

use fdgen_core::{parse_rational, Rational};
use num_traits::Zero;

pub fn q(text: &str) -> Rational {
    parse_rational(text).expect("valid rational literal")
}

pub fn qs(texts: &[&str]) -> Vec<Rational> {
    texts.iter().map(|t| q(t)).collect()
}

/// Evaluates a polynomial in `λ` given constant term first.
pub fn eval(coeffs: &[&str], lambda: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * lambda.clone() + q(c))
}

pub const LAMBDA_SAMPLES: [&str; 5] = ["0", "1/2", "1", "3/2", "2"];

/// Backward-difference generator polynomials for `p = 1..=6`, coefficients of
/// `z^0, z^1, ...`. The `p = 2` quadratic coefficient is `1/2`.
pub const LUBICH: [&[&str]; 6] = [
    &["1", "-1"],
    &["3/2", "-2", "1/2"],
    &["11/6", "-3", "3/2", "-1/3"],
    &["25/12", "-4", "3", "-4/3", "1/4"],
    &["137/60", "-5", "5", "-10/3", "5/4", "-1/5"],
    &["147/60", "-6", "15/2", "-20/3", "15/4", "-6/5", "1/6"],
];

/// `(d, p, rows)`: `rows[j]` is `β_j` as a polynomial in `λ`.
pub type SymbolicTable = &'static [(usize, usize, &'static [&'static [&'static str]])];

/// Base order 1, `λ = r/α`.
pub const BASE_ONE: SymbolicTable = &[
    (1, 1, &[&["1"], &["-1"]]),
    (1, 2, &[&["3/2", "-1"], &["-2", "2"], &["1/2", "-1"]]),
    (
        1,
        3,
        &[
            &["11/6", "-2", "1/2"],
            &["-3", "5", "-3/2"],
            &["3/2", "-4", "3/2"],
            &["-1/3", "1", "-1/2"],
        ],
    ),
    (
        1,
        4,
        &[
            &["25/12", "-35/12", "5/4", "-1/6"],
            &["-4", "26/3", "-9/2", "2/3"],
            &["3", "-19/2", "6", "-1"],
            &["-4/3", "14/3", "-7/2", "2/3"],
            &["1/4", "-11/12", "3/4", "-1/6"],
        ],
    ),
    (
        1,
        5,
        &[
            &["137/60", "-15/4", "17/8", "-1/2", "1/24"],
            &["-5", "77/6", "-71/8", "7/3", "-5/24"],
            &["5", "-107/6", "59/4", "-13/3", "5/12"],
            &["-10/3", "13", "-49/4", "4", "-5/12"],
            &["5/4", "-61/12", "41/8", "-11/6", "5/24"],
            &["-1/5", "5/6", "-7/8", "1/3", "-1/24"],
        ],
    ),
];

/// Base order 2, `λ = 2r/α`.
pub const BASE_TWO: SymbolicTable = &[
    (2, 1, &[&["1"], &["-2"], &["1"]]),
    (
        2,
        2,
        &[&["2", "-1"], &["-5", "3"], &["4", "-3"], &["-1", "1"]],
    ),
    (
        2,
        3,
        &[
            &["35/12", "-5/2", "1/2"],
            &["-26/3", "9", "-2"],
            &["19/2", "-12", "3"],
            &["-14/3", "7", "-2"],
            &["11/12", "-3/2", "1/2"],
        ],
    ),
    (
        2,
        4,
        &[
            &["15/4", "-17/4", "3/2", "-1/6"],
            &["-77/6", "71/4", "-7", "5/6"],
            &["107/6", "-59/2", "13", "-5/3"],
            &["-13", "49/2", "-12", "5/3"],
            &["61/12", "-41/4", "11/2", "-5/6"],
            &["-5/6", "7/4", "-1", "1/6"],
        ],
    ),
    (
        2,
        5,
        &[
            &["203/45", "-49/8", "35/12", "-7/12", "1/24"],
            &["-87/5", "29", "-31/2", "10/3", "-1/4"],
            &["117/4", "-461/8", "137/4", "-95/12", "5/8"],
            &["-254/9", "62", "-121/3", "10", "-5/6"],
            &["33/2", "-307/8", "107/4", "-85/12", "5/8"],
            &["-27/5", "13", "-19/2", "8/3", "-1/4"],
            &["137/180", "-15/8", "17/12", "-5/12", "1/24"],
        ],
    ),
];

/// Base order 3, `λ = 3r/α`.
pub const BASE_THREE: SymbolicTable = &[
    (3, 1, &[&["1"], &["-3"], &["3"], &["-1"]]),
    (
        3,
        2,
        &[
            &["5/2", "-1"],
            &["-9", "4"],
            &["12", "-6"],
            &["-7", "4"],
            &["3/2", "-1"],
        ],
    ),
    (
        3,
        3,
        &[
            &["17/4", "-3", "1/2"],
            &["-71/4", "14", "-5/2"],
            &["59/2", "-26", "5"],
            &["-49/2", "24", "-5"],
            &["41/4", "-11", "5/2"],
            &["-7/4", "2", "-1/2"],
        ],
    ),
    (
        3,
        4,
        &[
            &["49/8", "-35/6", "7/4", "-1/6"],
            &["-29", "31", "-10", "1"],
            &["461/8", "-137/2", "95/4", "-5/2"],
            &["-62", "242/3", "-30", "10/3"],
            &["307/8", "-107/2", "85/4", "-5/2"],
            &["-13", "19", "-8", "1"],
            &["15/8", "-17/6", "5/4", "-1/6"],
        ],
    ),
    (
        3,
        5,
        &[
            &["967/120", "-28/3", "23/6", "-2/3", "1/24"],
            &["-638/15", "111/2", "-295/12", "9/2", "-7/24"],
            &["3929/40", "-142", "135/2", "-13", "7/8"],
            &["-389/3", "1219/6", "-1235/12", "125/6", "-35/24"],
            &["2545/24", "-176", "565/6", "-20", "35/24"],
            &["-268/5", "185/2", "-207/4", "23/2", "-7/8"],
            &["1849/120", "-82/3", "95/6", "-11/3", "7/24"],
            &["-29/15", "7/2", "-25/12", "1/2", "-1/24"],
        ],
    ),
];

/// A compact classical formula: `(d, p, r, weights, leading error, name)`.
pub struct CompactRow {
    pub d: usize,
    pub p: usize,
    pub r: &'static str,
    pub weights: &'static [&'static str],
    pub error: &'static str,
    pub name: &'static str,
}

pub const COMPACT_ROWS: [CompactRow; 5] = [
    CompactRow {
        d: 1,
        p: 3,
        r: "0",
        weights: &["11/6", "-3", "3/2", "-1/3"],
        error: "-1/4",
        name: "left",
    },
    CompactRow {
        d: 3,
        p: 4,
        r: "3",
        weights: &["-1/8", "1", "-13/8", "0", "13/8", "-1", "1/8"],
        error: "-7/120",
        name: "central",
    },
    CompactRow {
        d: 2,
        p: 4,
        r: "1",
        weights: &["5/6", "-5/4", "-1/3", "7/6", "-1/2", "1/12"],
        error: "13/180",
        name: "shifted",
    },
    CompactRow {
        d: 3,
        p: 4,
        r: "6",
        weights: &["-15/8", "13", "-307/8", "62", "-461/8", "29", "-49/8"],
        error: "-29/15",
        name: "right",
    },
    CompactRow {
        d: 2,
        p: 4,
        r: "3/2",
        weights: &["3/16", "41/48", "-67/24", "19/8", "-35/48", "5/48"],
        error: "341/5760",
        name: "staggered",
    },
];

/// The squared third-order, shift-one, base-one generator.
pub const SQUARED_GENERATOR: [&str; 7] = [
    "529/576", "-161/96", "101/192", "43/144", "-11/192", "-1/96", "1/576",
];
