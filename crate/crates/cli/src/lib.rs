//! Command-line front end: argument grammar, dispatch over number fields and
//! report formatting. [`run`] is the whole program minus process I/O, so it
//! can be exercised directly from tests.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use fdgen_core::oracle::vandermonde_cramer;
use fdgen_core::scalar::with_digits;
use fdgen_core::series::{grunwald_weights, miller_expand};
use fdgen_core::solvers::fractional_diagnostic;
use fdgen_core::{
    beta_coefficients, compact_stencil, convergence_study, error_coefficients, example1, example2,
    noncompact_stencil, parse_scalar, render_stencil, shift_for_kind, vandermonde_solve,
    ApproxParams, BigDecimal, Error, Field, Mode, Rational, Real, RenderFormat, Scheme,
    SolveReport, StencilKind,
};
use serde::Serialize;

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(
    name = "fdgen",
    version,
    about = "Explicit difference formulas for classical and fractional derivatives"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct Arithmetic {
    /// Number field: rational (exact), f64, or big (decimal with --digits).
    #[arg(long, value_parser = parse_mode)]
    mode: Option<Mode>,
    /// Decimal digits for --mode big.
    #[arg(long, default_value_t = 50)]
    digits: usize,
}

#[derive(Debug, Clone, Args)]
struct Params {
    /// Derivative order (integer, fraction "a/b" or decimal).
    #[arg(long)]
    alpha: String,
    /// Base differential order.
    #[arg(long)]
    d: usize,
    /// Accuracy order.
    #[arg(long)]
    p: usize,
    /// Shift (integer, fraction or decimal).
    #[arg(long, default_value = "0")]
    r: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generator coefficients and error coefficients.
    Weights {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        arith: Arithmetic,
        /// Number of error coefficients a_p, a_(p+1), ... to report (at most p).
        #[arg(long, default_value_t = 1)]
        errors: usize,
        #[arg(long, default_value = "human", value_parser = parse_format)]
        format: RenderFormat,
    },
    /// Classical finite-difference stencil.
    Stencil {
        /// Derivative order; defaults to d (compact). A multiple of d gives a non-compact formula.
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: usize,
        /// left, right, central, shifted or staggered. Inferred from --r when omitted.
        #[arg(long)]
        kind: Option<String>,
        /// Shift for shifted and staggered stencils.
        #[arg(long)]
        r: Option<String>,
        #[command(flatten)]
        arith: Arithmetic,
        #[arg(long, default_value = "human", value_parser = parse_format)]
        format: RenderFormat,
    },
    /// Series weights of the generator P(z)^(alpha/d), or of (1 - z)^alpha.
    Expand {
        #[command(flatten)]
        params: Params,
        /// Number of weights.
        #[arg(long = "K", default_value_t = 10)]
        k: usize,
        /// Expand (1 - z)^alpha instead of the order-p generator.
        #[arg(long)]
        grunwald: bool,
        #[command(flatten)]
        arith: Arithmetic,
        #[arg(long, default_value = "human", value_parser = parse_format)]
        format: RenderFormat,
    },
    /// Regenerate a reference table (1-5).
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        which: u8,
    },
    /// Classical two-point problem u'' = -sin x on [-1, 1].
    Bvp {
        /// Single grid size.
        #[arg(long = "N")]
        n: Option<usize>,
        /// Largest grid size of a doubling study starting at 4.
        #[arg(long = "Nmax", default_value_t = 128)]
        n_max: usize,
        /// central, unified or both.
        #[arg(long, default_value = "both")]
        scheme: String,
        #[command(flatten)]
        arith: Arithmetic,
        #[arg(long, default_value = "csv", value_parser = parse_format)]
        format: RenderFormat,
    },
    /// Fractional two-point problem D^alpha u = Gamma(4+alpha)/6 x^3 on [0, 1].
    Fbvp {
        #[arg(long)]
        alpha: String,
        /// Single grid size.
        #[arg(long = "N")]
        n: Option<usize>,
        /// Largest grid size of a doubling study starting at 8.
        #[arg(long = "Nmax", default_value_t = 256)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[command(flatten)]
        arith: Arithmetic,
        #[arg(long, default_value = "csv", value_parser = parse_format)]
        format: RenderFormat,
    },
    /// Cross-check the explicit coefficients against the Vandermonde system.
    Oracle {
        #[arg(long, required_unless_present = "sweep")]
        alpha: Option<String>,
        #[arg(long, required_unless_present = "sweep")]
        d: Option<usize>,
        #[arg(long, required_unless_present = "sweep")]
        p: Option<usize>,
        #[arg(long, default_value = "0")]
        r: String,
        /// Check every d <= 4, p <= 6 on a fixed set of shifts instead.
        #[arg(long, conflicts_with_all = ["alpha", "d", "p"])]
        sweep: bool,
    },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<RenderFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit status 2 for bad arguments and violated preconditions, 1 for failures
/// of the computation itself.
fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. }
        | Error::ZeroDenominator(_)
        | Error::MixedRealizations(..)
        | Error::InvalidParameter(_)
        | Error::NonPositiveBase(_)
        | Error::ZeroLeadingCoefficient
        | Error::Dimension(_) => 2,
        Error::InexactPower(_)
        | Error::BudgetExceeded { .. }
        | Error::MissingSample(_)
        | Error::Singular(_)
        | Error::Render(_) => 1,
    }
}

/// Text plus warnings produced by a subcommand.
#[derive(Default)]
struct Report {
    out: String,
    warnings: Vec<String>,
    status: i32,
}

impl Report {
    fn text(out: String) -> Self {
        Report {
            out,
            ..Report::default()
        }
    }
}

type CmdResult = fdgen_core::Result<Report>;

/// Runs the program on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    status: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    status: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(report) => Output {
            status: report.status,
            stdout: report.out,
            stderr: report
                .warnings
                .iter()
                .map(|w| format!("warning: {w}\n"))
                .collect(),
        },
        Err(e) => Output {
            status: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Runs `body` in the field selected by `mode`.
macro_rules! in_field {
    ($mode:expr, $digits:expr, $body:ident ( $($arg:expr),* $(,)? )) => {
        match $mode {
            Mode::Rational => $body::<Rational>($($arg),*),
            Mode::Float64 => $body::<f64>($($arg),*),
            Mode::BigDecimal => with_digits($digits, || $body::<BigDecimal>($($arg),*)).and_then(|r| r),
        }
    };
}

/// Like [`in_field`] for computations that need transcendental functions.
macro_rules! in_real_field {
    ($mode:expr, $digits:expr, $body:ident ( $($arg:expr),* $(,)? )) => {
        match $mode {
            Mode::Rational => Err(Error::InvalidParameter(
                "this command needs --mode f64 or --mode big".into(),
            )),
            Mode::Float64 => $body::<f64>($($arg),*),
            Mode::BigDecimal => with_digits($digits, || $body::<BigDecimal>($($arg),*)).and_then(|r| r),
        }
    };
}

fn execute(command: Command) -> CmdResult {
    match command {
        Command::Weights {
            params,
            arith,
            errors,
            format,
        } => {
            let mode = arith.mode.unwrap_or(Mode::Rational);
            in_field!(
                mode,
                arith.digits,
                weights_cmd(&params, mode, errors, format)
            )
        }
        Command::Stencil {
            alpha,
            d,
            p,
            kind,
            r,
            arith,
            format,
        } => {
            let mode = arith.mode.unwrap_or(Mode::Rational);
            let spec = StencilSpec {
                alpha,
                d,
                p,
                kind,
                r,
            };
            in_field!(mode, arith.digits, stencil_cmd(&spec, mode, format))
        }
        Command::Expand {
            params,
            k,
            grunwald,
            arith,
            format,
        } => {
            let mode = arith.mode.unwrap_or(Mode::Rational);
            in_field!(
                mode,
                arith.digits,
                expand_cmd(&params, k, grunwald, mode, format)
            )
        }
        Command::Table { which } => table_cmd(which),
        Command::Bvp {
            n,
            n_max,
            scheme,
            arith,
            format,
        } => {
            let mode = arith.mode.unwrap_or(Mode::Float64);
            let ns = grid_sizes(n, 4, n_max)?;
            let schemes = match scheme.as_str() {
                "central" => vec![Scheme::Central],
                "unified" => vec![Scheme::Unified],
                "both" => vec![Scheme::Central, Scheme::Unified],
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "--scheme must be central, unified or both, got {other}"
                    )))
                }
            };
            in_real_field!(mode, arith.digits, bvp_cmd(&ns, &schemes, format))
        }
        Command::Fbvp {
            alpha,
            n,
            n_max,
            p,
            d,
            r,
            arith,
            format,
        } => {
            let mode = arith.mode.unwrap_or(Mode::Float64);
            let ns = grid_sizes(n, 8, n_max)?;
            let scheme = Scheme::Fractional { p, d, r };
            in_real_field!(
                mode,
                arith.digits,
                fbvp_cmd(&alpha, mode, &ns, scheme, format)
            )
        }
        Command::Oracle { alpha, d, p, r, .. } => {
            let params = match (alpha, d, p) {
                (Some(alpha), Some(d), Some(p)) => Some(Params { alpha, d, p, r }),
                _ => None,
            };
            oracle_cmd(params.as_ref())
        }
    }
}

fn grid_sizes(single: Option<usize>, start: usize, max: usize) -> fdgen_core::Result<Vec<usize>> {
    if let Some(n) = single {
        return Ok(vec![n]);
    }
    if max < start {
        return Err(Error::InvalidParameter(format!(
            "--Nmax >= {start} required, got {max}"
        )));
    }
    Ok(std::iter::successors(Some(start), |n| Some(n * 2))
        .take_while(|n| *n <= max)
        .collect())
}

fn scalar<F: Field>(text: &str, mode: Mode) -> fdgen_core::Result<F> {
    F::from_scalar(&parse_scalar(text, mode)?)
}

fn build_params<F: Field>(params: &Params, mode: Mode) -> fdgen_core::Result<ApproxParams<F>> {
    ApproxParams::new(
        scalar(&params.alpha, mode)?,
        params.d,
        params.p,
        scalar(&params.r, mode)?,
    )
}

fn strings<F: Field>(v: &[F]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn render_err(e: impl std::fmt::Display) -> Error {
    Error::Render(e.to_string())
}

fn csv_text<R: Serialize>(rows: impl IntoIterator<Item = R>) -> fdgen_core::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(render_err)?;
    }
    String::from_utf8(w.into_inner().map_err(render_err)?).map_err(render_err)
}

#[derive(Serialize)]
struct WeightsRecord {
    alpha: String,
    d: usize,
    p: usize,
    r: String,
    lambda: String,
    beta: Vec<String>,
    numerators: Vec<String>,
    denominators: Vec<String>,
    errors: Vec<(usize, String)>,
    superconvergent: bool,
}

#[derive(Serialize)]
struct WeightRow {
    j: usize,
    beta: String,
    numerator: String,
    denominator: String,
}

fn weights_cmd<F: Field>(
    params: &Params,
    mode: Mode,
    errors: usize,
    format: RenderFormat,
) -> CmdResult {
    let ap = build_params::<F>(params, mode)?;
    let cv = beta_coefficients(&ap);
    let errs = error_coefficients(&cv, errors)?;
    let out = match format {
        RenderFormat::Human => {
            let mut out = format!("{}\n", strings(&cv.beta).join(" "));
            for (m, a) in &errs.coefficients {
                if *m == ap.p() {
                    let _ = writeln!(out, "error: {a}");
                } else {
                    let _ = writeln!(out, "error[{m}]: {a}");
                }
            }
            out
        }
        RenderFormat::Json => {
            let record = WeightsRecord {
                alpha: ap.alpha().to_string(),
                d: ap.d(),
                p: ap.p(),
                r: ap.r().to_string(),
                lambda: ap.lambda().to_string(),
                beta: strings(&cv.beta),
                numerators: strings(&cv.numerators),
                denominators: strings(&cv.denominators),
                errors: errs
                    .coefficients
                    .iter()
                    .map(|(m, a)| (*m, a.to_string()))
                    .collect(),
                superconvergent: errs.is_superconvergent(),
            };
            serde_json::to_string_pretty(&record).map_err(render_err)? + "\n"
        }
        RenderFormat::Csv => csv_text((0..cv.len()).map(|j| WeightRow {
            j,
            beta: cv.beta[j].to_string(),
            numerator: cv.numerators[j].to_string(),
            denominator: cv.denominators[j].to_string(),
        }))?,
    };
    let mut report = Report::text(out);
    if errs.is_superconvergent() {
        report
            .warnings
            .push("leading error coefficient vanishes: the formula is super-convergent".into());
    }
    Ok(report)
}

struct StencilSpec {
    alpha: Option<usize>,
    d: usize,
    p: usize,
    kind: Option<String>,
    r: Option<String>,
}

fn stencil_cmd<F: Field>(spec: &StencilSpec, mode: Mode, format: RenderFormat) -> CmdResult {
    let r = spec
        .r
        .as_deref()
        .map(|t| scalar::<F>(t, mode))
        .transpose()?;
    let kind = match (spec.kind.as_deref(), r) {
        (Some("left"), _) => StencilKind::Left,
        (Some("right"), _) => StencilKind::Right,
        (Some("central"), _) => StencilKind::Central,
        (Some("shifted"), Some(r)) => StencilKind::Shifted(r),
        (Some("staggered"), Some(r)) => StencilKind::Staggered(r),
        (Some(k @ ("shifted" | "staggered")), None) => {
            return Err(Error::InvalidParameter(format!("--kind {k} needs --r")));
        }
        (Some(other), _) => {
            return Err(Error::InvalidParameter(format!(
                "--kind must be left, right, central, shifted or staggered, got {other}"
            )));
        }
        (None, Some(r)) if r.is_integer() => StencilKind::Shifted(r),
        (None, Some(r)) => StencilKind::Staggered(r),
        (None, None) => StencilKind::Central,
    };
    let shift = shift_for_kind(&kind, spec.d, spec.p)?;
    let alpha = spec.alpha.unwrap_or(spec.d);
    let st = if alpha == spec.d {
        compact_stencil(spec.d, spec.p, shift.r.clone())?
    } else {
        noncompact_stencil(alpha, spec.d, spec.p, shift.r.clone())?
    };
    let mut report = Report::text(
        render_stencil(&st, format)?
            + if format == RenderFormat::Csv {
                ""
            } else {
                "\n"
            },
    );
    if shift.extrapolative {
        report.warnings.push(format!(
            "shift {} lies outside the stencil support; the formula extrapolates",
            shift.r
        ));
    }
    Ok(report)
}

#[derive(Serialize)]
struct SeriesRecord {
    gamma: String,
    base: Vec<String>,
    weights: Vec<String>,
}

fn expand_cmd<F: Field>(
    params: &Params,
    k: usize,
    grunwald: bool,
    mode: Mode,
    format: RenderFormat,
) -> CmdResult {
    let (gamma, base, weights) = if grunwald {
        let alpha = scalar::<F>(&params.alpha, mode)?;
        let w = grunwald_weights(&alpha, k)?;
        (alpha, vec![F::one(), -F::one()], w)
    } else {
        let ap = build_params::<F>(params, mode)?;
        let cv = beta_coefficients(&ap);
        let series = miller_expand(&cv.beta, &ap.gamma(), k)?;
        (series.gamma, series.base, series.weights)
    };
    let out = match format {
        RenderFormat::Human => format!("{}\n", strings(&weights).join(" ")),
        RenderFormat::Json => {
            let record = SeriesRecord {
                gamma: gamma.to_string(),
                base: strings(&base),
                weights: strings(&weights),
            };
            serde_json::to_string_pretty(&record).map_err(render_err)? + "\n"
        }
        RenderFormat::Csv => {
            #[derive(Serialize)]
            struct Row {
                k: usize,
                weight: String,
            }
            csv_text(weights.iter().enumerate().map(|(k, w)| Row {
                k,
                weight: w.to_string(),
            }))?
        }
    };
    Ok(Report::text(out))
}

const LAMBDA_SAMPLES: [&str; 5] = ["0", "1/2", "1", "3/2", "2"];

/// The five compact formulas of the reference table: `(d, p, r, name)`.
const COMPACT_EXAMPLES: [(usize, usize, &str, &str); 5] = [
    (1, 3, "0", "left"),
    (3, 4, "3", "central"),
    (2, 4, "1", "shifted"),
    (3, 4, "6", "right"),
    (2, 4, "3/2", "staggered"),
];

fn table_cmd(which: u8) -> CmdResult {
    let rational = |t: &str| scalar::<Rational>(t, Mode::Rational);
    let mut out = String::new();
    match which {
        1 => {
            let _ = writeln!(
                out,
                "# backward-difference generators P_p(z), W_p(z) = P_p(z)^alpha"
            );
            for p in 1..=6 {
                let cv =
                    beta_coefficients(&ApproxParams::new(Rational::one(), 1, p, Rational::zero())?);
                let _ = writeln!(out, "p = {p}: {}", fdgen_core::generator_polynomial(&cv));
            }
        }
        2..=4 => {
            let d = usize::from(which - 1);
            let _ = writeln!(
                out,
                "# base order d = {d}: beta_0 .. beta_(p+{}) at lambda = r d / alpha",
                d - 1
            );
            for p in 1..=5 {
                for l in LAMBDA_SAMPLES {
                    // alpha = d makes lambda = r
                    let ap = ApproxParams::new(Rational::from_usize(d), d, p, rational(l)?)?;
                    let cv = beta_coefficients(&ap);
                    let _ = writeln!(
                        out,
                        "p = {p}, lambda = {l}: {}",
                        strings(&cv.beta).join(", ")
                    );
                }
            }
        }
        _ => {
            let _ = writeln!(out, "# compact formulas: d alpha p r | weights | error");
            for (d, p, r, name) in COMPACT_EXAMPLES {
                let st = compact_stencil(d, p, rational(r)?)?;
                let _ = writeln!(
                    out,
                    "{d} {d} {p} {r} | {} | {name}",
                    render_stencil(&st, RenderFormat::Human)?
                );
            }
        }
    }
    Ok(Report::text(out))
}

fn fmt_order(order: Option<f64>) -> String {
    order.map_or_else(String::new, |o| format!("{o:.4}"))
}

fn fmt_error<F: Field>(report: &SolveReport<F>) -> String {
    report
        .max_error
        .as_ref()
        .map_or_else(String::new, |e| format!("{:.6e}", e.to_f64()))
}

#[derive(Serialize)]
struct StudyRow {
    scheme: String,
    #[serde(rename = "N")]
    n: usize,
    h: String,
    accuracy_order: Option<usize>,
    max_error: String,
    order: String,
}

fn study_rows<F: Field>(scheme: Scheme, reports: &[SolveReport<F>]) -> Vec<StudyRow> {
    reports
        .iter()
        .map(|r| StudyRow {
            scheme: scheme.to_string(),
            n: r.n_intervals,
            h: format!("{}", r.h.to_f64()),
            accuracy_order: match scheme {
                Scheme::Unified => Some(r.n_intervals - 1),
                Scheme::Central => Some(2),
                Scheme::Fractional { p, .. } => Some(p),
            },
            max_error: fmt_error(r),
            order: fmt_order(r.empirical_order),
        })
        .collect()
}

fn emit_study(rows: &[StudyRow], format: RenderFormat) -> fdgen_core::Result<String> {
    match format {
        RenderFormat::Csv => csv_text(rows),
        RenderFormat::Json => Ok(serde_json::to_string_pretty(rows).map_err(render_err)? + "\n"),
        RenderFormat::Human => {
            let mut out = format!(
                "{:<32} {:>6} {:>12} {:>6} {:>14} {:>8}\n",
                "scheme", "N", "h", "p", "max error", "order"
            );
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:<32} {:>6} {:>12} {:>6} {:>14} {:>8}",
                    r.scheme,
                    r.n,
                    r.h,
                    r.accuracy_order.map_or_else(String::new, |p| p.to_string()),
                    r.max_error,
                    if r.order.is_empty() { "--" } else { &r.order }
                );
            }
            Ok(out)
        }
    }
}

fn bvp_cmd<F: Real>(ns: &[usize], schemes: &[Scheme], format: RenderFormat) -> CmdResult {
    let problem = example1::<F>();
    let mut rows = Vec::new();
    for &scheme in schemes {
        rows.extend(study_rows(
            scheme,
            &convergence_study(&problem, scheme, ns)?,
        ));
    }
    Ok(Report::text(emit_study(&rows, format)?))
}

fn fbvp_cmd<F: Real>(
    alpha: &str,
    mode: Mode,
    ns: &[usize],
    scheme: Scheme,
    format: RenderFormat,
) -> CmdResult {
    let problem = example2(scalar::<F>(alpha, mode)?)?;
    let Scheme::Fractional { p, d, r } = scheme else {
        unreachable!("fbvp always uses the fractional scheme")
    };
    let diag = fractional_diagnostic(&problem, p, d, r)?;
    let reports = convergence_study(&problem, scheme, ns)?;
    let mut report = Report::text(emit_study(&study_rows(scheme, &reports), format)?);
    if !diag.converges_on_unit_disk {
        report.warnings.push(format!(
            "generator series does not converge on the unit disk (|beta_last / beta_0| = {:.4}, beta_0 > 0: {}); expect order loss",
            diag.edge_ratio, diag.beta0_positive
        ));
    }
    if diag.advisory {
        report.warnings.push(
            "convergence diagnostic is only established for d = 2, p = 2; treat it as advisory"
                .into(),
        );
    }
    Ok(report)
}

fn oracle_check(ap: &ApproxParams<Rational>) -> fdgen_core::Result<(bool, String)> {
    let explicit = beta_coefficients(ap).beta;
    let eliminated = vandermonde_solve(ap)?;
    let cramer = vandermonde_cramer(ap)?;
    let agree = explicit == eliminated && explicit == cramer;
    let mut line = format!(
        "alpha = {}, d = {}, p = {}, r = {}: {}",
        ap.alpha(),
        ap.d(),
        ap.p(),
        ap.r(),
        if agree { "agree" } else { "DISAGREE" }
    );
    if !agree {
        let _ = write!(
            line,
            "\n  explicit:    {}\n  elimination: {}\n  cramer:      {}",
            strings(&explicit).join(" "),
            strings(&eliminated).join(" "),
            strings(&cramer).join(" ")
        );
    }
    Ok((agree, line))
}

fn oracle_cmd(params: Option<&Params>) -> CmdResult {
    let mut lines = Vec::new();
    let mut all_agree = true;
    if let Some(params) = params {
        let (agree, line) = oracle_check(&build_params(params, Mode::Rational)?)?;
        all_agree = agree;
        lines.push(line);
    } else {
        for d in 1..=4 {
            for p in 1..=6 {
                for l in ["0", "1/3", "1/2", "1", "3/2", "2", "5/2"] {
                    let ap = ApproxParams::new(
                        Rational::from_usize(d),
                        d,
                        p,
                        scalar(l, Mode::Rational)?,
                    )?;
                    let (agree, line) = oracle_check(&ap)?;
                    all_agree &= agree;
                    lines.push(line);
                }
            }
        }
    }
    let mut report = Report::text(lines.join("\n") + "\n");
    if !all_agree {
        report.status = 1;
    }
    Ok(report)
}
