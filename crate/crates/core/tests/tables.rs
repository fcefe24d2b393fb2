//! Regression against the published coefficient tables.

mod common;

use common::*;
use fdgen_core::{
    beta_coefficients, compact_stencil, error_coefficients, render_stencil, ApproxParams, Rational,
    RenderFormat,
};

fn beta(alpha: &Rational, d: usize, p: usize, r: &Rational) -> Vec<Rational> {
    beta_coefficients(&ApproxParams::new(alpha.clone(), d, p, r.clone()).unwrap()).beta
}

#[test]
fn backward_difference_generators() {
    for (i, expected) in LUBICH.iter().enumerate() {
        let p = i + 1;
        // unshifted, any order α
        for alpha in ["1", "1/2", "7/3"] {
            assert_eq!(
                beta(&q(alpha), 1, p, &q("0")),
                qs(expected),
                "p = {p}, alpha = {alpha}"
            );
        }
    }
}

fn check_symbolic(table: SymbolicTable) {
    for &(d, p, rows) in table {
        for sample in LAMBDA_SAMPLES {
            let lambda = q(sample);
            // α = d makes λ = r
            let got = beta(&Rational::from_integer(d.into()), d, p, &lambda);
            let want: Vec<Rational> = rows.iter().map(|row| eval(row, &lambda)).collect();
            assert_eq!(got, want, "d = {d}, p = {p}, lambda = {sample}");
        }
    }
}

#[test]
fn base_order_one_rows() {
    check_symbolic(BASE_ONE);
}

#[test]
fn base_order_two_rows() {
    check_symbolic(BASE_TWO);
}

#[test]
fn base_order_three_rows() {
    check_symbolic(BASE_THREE);
}

#[test]
fn base_order_one_depends_on_lambda_only() {
    // Same λ = r d / α reached through different (α, r) pairs.
    for &(d, p, _) in BASE_ONE {
        let a = beta(&q("1/2"), d, p, &q("1/4"));
        let b = beta(&q("3"), d, p, &q("3/2"));
        assert_eq!(a, b);
    }
}

#[test]
fn compact_rows_and_errors() {
    for row in &COMPACT_ROWS {
        let st = compact_stencil(row.d, row.p, q(row.r)).unwrap();
        assert_eq!(st.weights, qs(row.weights), "{}", row.name);
        assert_eq!(st.leading_error, q(row.error), "{}", row.name);

        let params =
            ApproxParams::new(Rational::from_integer(row.d.into()), row.d, row.p, q(row.r))
                .unwrap();
        let errs = error_coefficients(&beta_coefficients(&params), 1).unwrap();
        assert_eq!(errs.leading(), Some(&q(row.error)));
    }
}

#[test]
fn compact_rows_render_like_the_table() {
    let expected = [
        "(11/6), -3, 3/2, -1/3 | error -1/4",
        "-1/8, 1, -13/8, (0), 13/8, -1, 1/8 | error -7/120",
        "5/6, (-5/4), -1/3, 7/6, -1/2, 1/12 | error 13/180",
        "-15/8, 13, -307/8, 62, -461/8, 29, (-49/8) | error -29/15",
        "3/16, (41/48), -67/24, 19/8, -35/48, 5/48 | error 341/5760 | eval_fraction 1/2",
    ];
    for (row, want) in COMPACT_ROWS.iter().zip(expected) {
        let st = compact_stencil(row.d, row.p, q(row.r)).unwrap();
        assert_eq!(render_stencil(&st, RenderFormat::Human).unwrap(), want);
    }
}
