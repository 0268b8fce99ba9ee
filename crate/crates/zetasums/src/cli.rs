//! Command-line front end: evaluate any quantity, compare representations
//! against each other and the quadrature oracle, and run the full
//! cross-validation suite.
//!
//! Exit codes: 0 pass, 2 tolerance failure, 3 domain error, 4 parse error.

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::double_sums::{s1_closed, s1_direct, s1_finite, s2_closed, s2_direct, s2_integer_sum};
use crate::error::EvalError;
use crate::hurwitz::{hurwitz_zeta, wilton_zeta_shift, zeta1, zeta_one_minus};
use crate::integrals::{
    i_critical_line, i_eps_probe, i_via_2f1, i_via_zeta, j_critical_line, j_eps_probe, j_via_2f1,
    j_via_alt, j_via_zeta, ParameterPair, RepresentationId,
};
use crate::moments::{h_finite, h_integer, h_negative_integer, h_series, MomentSpec};
use crate::quadrature::{
    oracle_i, oracle_i_star, oracle_j, oracle_j_star, oracle_moment, QuadratureResult,
};
use crate::report::{parse_complex, EvaluationReport, OracleField, OutputFormat, ReportStatus};
use crate::series::{near_integer, SeriesValue, INT_EPS};
use crate::suite;
use crate::zeta::riemann_zeta;

const EXIT_OK: i32 = 0;
const EXIT_TOLERANCE: i32 = 2;
const EXIT_DOMAIN: i32 = 3;
const EXIT_PARSE: i32 = 4;

#[derive(Parser)]
#[command(
    name = "zetasums",
    about = "Evaluate and cross-validate integrals and sums of products of Hurwitz zeta functions",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a quantity through its preferred representation
    Eval(EvalArgs),
    /// Evaluate all applicable representations plus the quadrature oracle
    Compare(EvalArgs),
    /// Run the cross-validation suite and report each criterion
    Suite(SuiteArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// One of: I, J, H, S1, S2, zeta, hurwitz, zeta1
    quantity: String,
    /// First parameter (complex, e.g. 2.3 or 0.5+1i); the exponent for
    /// zeta/hurwitz/zeta1
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Second parameter; the real shift for hurwitz/zeta1
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Moment order for H
    #[arg(long)]
    n: Option<u32>,
    /// Integer exponent for H and the finite S1 form
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    /// Critical-line parameter: evaluates I or J at (1/2+it, 1/2-it)
    #[arg(long, allow_hyphen_values = true)]
    t: Option<f64>,
    /// Series tolerance for eval; comparison tolerance for compare
    #[arg(long)]
    tol: Option<f64>,
    /// Term budget for the direct double sums
    #[arg(long = "terms-max", default_value_t = 400)]
    terms_max: usize,
    /// Output format: text, csv or json
    #[arg(long, default_value = "text")]
    format: String,
    /// Write the report here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SuiteArgs {
    /// Restrict to one module: special, hurwitz, hyp2f1, integrals,
    /// moments or double_sums
    #[arg(long)]
    only: Option<String>,
    /// Loosen the pinned pass thresholds to at least this value
    #[arg(long)]
    tol: Option<f64>,
    /// Output format for the report file: text, csv or json
    #[arg(long, default_value = "text")]
    format: String,
    /// Write the report here in addition to the per-criterion lines
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parse the command line and run; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_PARSE,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Eval(args) => dispatch_eval(args, false),
        Command::Compare(args) => dispatch_eval(args, true),
        Command::Suite(args) => run_suite(args),
    }
}

fn parse_arg(name: &str, value: &Option<String>) -> Result<Complex64, i32> {
    match value {
        Some(s) => parse_complex(s).map_err(|e| {
            eprintln!("error: --{name}: {e}");
            EXIT_PARSE
        }),
        None => {
            eprintln!("error: missing required flag --{name}");
            Err(EXIT_PARSE)
        }
    }
}

fn real_arg(name: &str, value: &Option<String>) -> Result<f64, i32> {
    let z = parse_arg(name, value)?;
    if z.im != 0.0 {
        eprintln!("error: --{name} must be real for this quantity");
        return Err(EXIT_PARSE);
    }
    Ok(z.re)
}

fn eval_exit(e: &EvalError) -> i32 {
    eprintln!("error: {e}");
    EXIT_DOMAIN
}

fn push_series(report: &mut EvaluationReport, tag: &str, v: &SeriesValue) {
    report.push_result(tag, v.value, v.abs_error_estimate, v.terms_used);
}

fn push_value(report: &mut EvaluationReport, tag: &str, v: Complex64) {
    report.push_result(tag, v, f64::EPSILON * v.norm().max(1.0), 1);
}

fn set_oracle(report: &mut EvaluationReport, q: &QuadratureResult) {
    report.oracle = Some(OracleField {
        value: q.value.into(),
        abs_error_estimate: q.abs_error_estimate,
        evaluations: q.evaluations,
    });
}

fn emit(report: &EvaluationReport, args: &EvalArgs) -> i32 {
    let format: OutputFormat = match args.format.parse() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    let body = report.render(format);
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_DOMAIN;
            }
        }
        None => print!("{body}"),
    }
    match report.status {
        ReportStatus::Failed => EXIT_TOLERANCE,
        _ => EXIT_OK,
    }
}

fn dispatch_eval(args: EvalArgs, compare: bool) -> i32 {
    let series_tol = if compare {
        1e-13
    } else {
        args.tol.unwrap_or(1e-13)
    };
    let compare_tol = args.tol.unwrap_or(1e-8);
    let quantity = args.quantity.to_uppercase();
    let result = match quantity.as_str() {
        "I" | "J" => eval_product_integral(&args, &quantity, compare, series_tol),
        "H" => eval_moment(&args, compare, series_tol),
        "S1" => eval_s1(&args, compare),
        "S2" => eval_s2(&args, compare),
        "ZETA" => eval_zeta(&args),
        "HURWITZ" => eval_hurwitz(&args, compare, series_tol),
        "ZETA1" => eval_zeta1(&args, compare, series_tol),
        other => {
            eprintln!(
                "error: unknown quantity '{other}' (expected I, J, H, S1, S2, zeta, hurwitz, zeta1)"
            );
            return EXIT_PARSE;
        }
    };
    match result {
        Ok(mut report) => {
            if compare {
                report.finalize(compare_tol);
            }
            emit(&report, &args)
        }
        Err(code) => code,
    }
}

fn eval_product_integral(
    args: &EvalArgs,
    quantity: &str,
    compare: bool,
    tol: f64,
) -> Result<EvaluationReport, i32> {
    let is_i = quantity == "I";
    if let Some(t) = args.t {
        let mut report = EvaluationReport::new(quantity)
            .with_param("a", Complex64::new(0.5, t))
            .with_param("b", Complex64::new(0.5, -t));
        let cl = if is_i {
            i_critical_line(t, tol)
        } else {
            j_critical_line(t, tol)
        }
        .map_err(|e| eval_exit(&e))?;
        push_series(
            &mut report,
            if is_i { "I_CRITICAL" } else { "J_CRITICAL" },
            &cl,
        );
        if compare {
            let orc = if is_i {
                oracle_i(Complex64::new(0.5, t), Complex64::new(0.5, -t))
            } else {
                oracle_j(Complex64::new(0.5, t), Complex64::new(0.5, -t))
            }
            .map_err(|e| eval_exit(&e))?;
            set_oracle(&mut report, &orc);
        }
        return Ok(report);
    }
    let a = parse_arg("a", &args.a)?;
    let b = parse_arg("b", &args.b)?;
    let p = ParameterPair::new(a, b);
    let mut report = EvaluationReport::new(quantity)
        .with_param("a", a)
        .with_param("b", b);

    let zeta_rep = if is_i {
        i_via_zeta(p, tol)
    } else {
        j_via_zeta(p, tol)
    };
    let mut routed = false;
    match zeta_rep {
        Ok(v) => push_series(
            &mut report,
            if is_i {
                RepresentationId::IZeta.tag()
            } else {
                RepresentationId::JZeta.tag()
            },
            &v,
        ),
        Err(EvalError::Degenerate(_)) => {
            routed = true;
            // integer parameters: the hypergeometric form is exact for I
            // with Re > 1; otherwise fall back to the eps probe
            let hyp = if is_i {
                i_via_2f1(p, tol)
            } else {
                j_via_2f1(p, tol)
            };
            match hyp {
                Ok(v) => push_series(
                    &mut report,
                    if is_i {
                        RepresentationId::I2f1.tag()
                    } else {
                        RepresentationId::J2f1.tag()
                    },
                    &v,
                ),
                Err(_) => {
                    let probe = if is_i {
                        i_eps_probe(p, tol)
                    } else {
                        j_eps_probe(p, tol)
                    }
                    .map_err(|e| eval_exit(&e))?;
                    push_series(
                        &mut report,
                        if is_i { "I_EPS_PROBE" } else { "J_EPS_PROBE" },
                        &probe,
                    );
                }
            }
        }
        Err(e) => return Err(eval_exit(&e)),
    }
    if compare {
        if !routed {
            if is_i {
                if let Ok(v) = i_via_2f1(p, tol) {
                    push_series(&mut report, RepresentationId::I2f1.tag(), &v);
                }
            } else {
                if let Ok(v) = j_via_alt(p, tol) {
                    push_series(&mut report, RepresentationId::JAlt.tag(), &v);
                }
                if let Ok(v) = j_via_2f1(p, tol) {
                    push_series(&mut report, RepresentationId::J2f1.tag(), &v);
                }
            }
        }
        let orc = if is_i { oracle_i(a, b) } else { oracle_j(a, b) }.map_err(|e| eval_exit(&e))?;
        set_oracle(&mut report, &orc);
    }
    if routed {
        report.status = ReportStatus::DegenerateRouted;
    }
    Ok(report)
}

fn eval_moment(args: &EvalArgs, compare: bool, tol: f64) -> Result<EvaluationReport, i32> {
    let n = match args.n {
        Some(n) => n,
        None => {
            eprintln!("error: H needs --n");
            return Err(EXIT_PARSE);
        }
    };
    let a = match (&args.a, args.m) {
        (Some(_), _) => parse_arg("a", &args.a)?,
        (None, Some(m)) => Complex64::new(m as f64, 0.0),
        (None, None) => {
            eprintln!("error: H needs --a (or --m)");
            return Err(EXIT_PARSE);
        }
    };
    let spec = MomentSpec::new(n, a).map_err(|e| eval_exit(&e))?;
    let mut report = EvaluationReport::new("H")
        .with_param("a", a)
        .with_param("n", Complex64::new(n as f64, 0.0));
    let mut routed = false;
    match spec.integer_exponent() {
        Some(m) if m <= 0 => {
            let v = h_negative_integer(n, (-m) as u32).map_err(|e| eval_exit(&e))?;
            push_value(&mut report, "H_NEG_INT", Complex64::new(v, 0.0));
        }
        Some(m) if m >= 2 && (m as u32) <= n => {
            let v = h_integer(n, m as u32).map_err(|e| eval_exit(&e))?;
            push_value(&mut report, "H_INTEGER", Complex64::new(v, 0.0));
        }
        _ => match h_finite(spec, tol) {
            Ok(v) => push_value(&mut report, "H_FINITE", v),
            Err(EvalError::Degenerate(_)) => {
                routed = true;
                let v = h_series(spec, tol).map_err(|e| eval_exit(&e))?;
                push_series(&mut report, "H_SERIES", &v);
            }
            Err(e) => return Err(eval_exit(&e)),
        },
    }
    if compare {
        if n >= 1 {
            if let Ok(v) = h_series(spec, tol) {
                push_series(&mut report, "H_SERIES", &v);
            }
        }
        let orc = oracle_moment(n, a).map_err(|e| eval_exit(&e))?;
        set_oracle(&mut report, &orc);
    }
    if routed {
        report.status = ReportStatus::DegenerateRouted;
    }
    Ok(report)
}

fn eval_s1(args: &EvalArgs, compare: bool) -> Result<EvaluationReport, i32> {
    let (a, b) = match (args.m, args.n) {
        (Some(m), Some(n)) if args.a.is_none() => (
            Complex64::new(-(m as f64), 0.0),
            Complex64::new(-(n as f64), 0.0),
        ),
        _ => (parse_arg("a", &args.a)?, parse_arg("b", &args.b)?),
    };
    let mut report = EvaluationReport::new("S1")
        .with_param("a", a)
        .with_param("b", b);
    let closed = s1_closed(a, b).map_err(|e| eval_exit(&e))?;
    push_value(&mut report, "S1_CLOSED", closed);
    let npi = |z: Complex64| near_integer(z, INT_EPS).filter(|m| *m <= 0);
    if let (Some(ma), Some(mb)) = (npi(a), npi(b)) {
        let v = s1_finite((-ma) as u32, (-mb) as u32).map_err(|e| eval_exit(&e))?;
        push_value(&mut report, "S1_FINITE", Complex64::new(v, 0.0));
    }
    if compare {
        let direct = s1_direct(a, b, args.terms_max, args.terms_max).map_err(|e| eval_exit(&e))?;
        push_series(&mut report, "S1_DIRECT", &direct);
        if let Ok(orc) = oracle_j_star(a, b) {
            set_oracle(&mut report, &orc);
        }
    }
    Ok(report)
}

fn eval_s2(args: &EvalArgs, compare: bool) -> Result<EvaluationReport, i32> {
    let a = parse_arg("a", &args.a)?;
    let b = parse_arg("b", &args.b)?;
    let mut report = EvaluationReport::new("S2")
        .with_param("a", a)
        .with_param("b", b);
    let mut routed = false;
    if let Some(total) = near_integer(a + b, INT_EPS).filter(|s| *s <= 0) {
        routed = true;
        let v = s2_integer_sum(a, total).map_err(|e| eval_exit(&e))?;
        push_value(&mut report, "S2_INTEGER", v);
    } else {
        match s2_closed(a, b) {
            Ok(v) => push_value(&mut report, "S2_CLOSED", v),
            Err(EvalError::Degenerate(_)) => {
                routed = true;
                let v =
                    s2_direct(a, b, args.terms_max, args.terms_max).map_err(|e| eval_exit(&e))?;
                push_series(&mut report, "S2_DIRECT", &v);
            }
            Err(e) => return Err(eval_exit(&e)),
        }
    }
    if compare {
        if let Ok(v) = s2_direct(a, b, args.terms_max, args.terms_max) {
            push_series(&mut report, "S2_DIRECT", &v);
        }
        if let Ok(orc) = oracle_i_star(a, b) {
            set_oracle(&mut report, &orc);
        }
    }
    if routed {
        report.status = ReportStatus::DegenerateRouted;
    }
    Ok(report)
}

fn eval_zeta(args: &EvalArgs) -> Result<EvaluationReport, i32> {
    let a = parse_arg("a", &args.a)?;
    let mut report = EvaluationReport::new("zeta").with_param("a", a);
    let v = riemann_zeta(a).map_err(|e| eval_exit(&e))?;
    push_value(&mut report, "ZETA_EM", v);
    // dual route through the shifted-argument evaluator
    if let Ok(h) = hurwitz_zeta(a, 1.0) {
        push_value(&mut report, "HURWITZ_AT_1", h);
    }
    Ok(report)
}

fn eval_hurwitz(args: &EvalArgs, compare: bool, tol: f64) -> Result<EvaluationReport, i32> {
    let a = parse_arg("a", &args.a)?;
    let x = real_arg("b", &args.b)?;
    let mut report = EvaluationReport::new("hurwitz")
        .with_param("a", a)
        .with_param("x", Complex64::new(x, 0.0));
    let v = hurwitz_zeta(a, x).map_err(|e| eval_exit(&e))?;
    push_value(&mut report, "HURWITZ_EM", v);
    if compare && a.re > -2.0 && near_integer(a, INT_EPS).is_none() {
        // shift expansion around base x + 1/2
        if let Ok(w) = wilton_zeta_shift(
            a,
            Complex64::new(x + 0.5, 0.0),
            Complex64::new(0.5, 0.0),
            tol,
        ) {
            if w.converged {
                push_series(&mut report, "SHIFT_SERIES", &w);
            }
        }
    }
    Ok(report)
}

fn eval_zeta1(args: &EvalArgs, compare: bool, tol: f64) -> Result<EvaluationReport, i32> {
    let a = parse_arg("a", &args.a)?;
    let x = real_arg("b", &args.b)?;
    let mut report = EvaluationReport::new("zeta1")
        .with_param("a", a)
        .with_param("x", Complex64::new(x, 0.0));
    let v = zeta1(a, x).map_err(|e| eval_exit(&e))?;
    push_value(&mut report, "ZETA1", v);
    if compare && x < 1.0 && near_integer(a, INT_EPS).is_none() {
        // zeta(a, 1+x) through the Taylor expansion at negative offset
        if let Ok(w) = zeta_one_minus(a, -x, tol) {
            if w.converged {
                push_series(&mut report, "TAYLOR_SERIES", &w);
            }
        }
    }
    Ok(report)
}

fn run_suite(args: SuiteArgs) -> i32 {
    let format: OutputFormat = match args.format.parse() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    if let Some(only) = &args.only {
        let known = suite::CRITERIA.iter().any(|(_, _, m)| m == only);
        if !known {
            eprintln!(
                "error: unknown module '{only}' (expected special, hurwitz, hyp2f1, integrals, moments or double_sums)"
            );
            return EXIT_PARSE;
        }
    }
    let results = suite::run_all(args.only.as_deref(), args.tol);
    let mut all_pass = true;
    let mut lines = String::new();
    for r in &results {
        let line = r.render_line();
        println!("{line}");
        lines.push_str(&line);
        lines.push('\n');
        all_pass &= r.passed;
    }
    let body = match format {
        OutputFormat::Text => lines,
        OutputFormat::Csv => {
            let mut out = String::from("id,name,module,passed,max_err,tolerance,detail\n");
            for r in &results {
                out.push_str(&format!(
                    "{},{},{},{},{:e},{:e},{}\n",
                    r.id, r.name, r.module, r.passed, r.max_err, r.tolerance, r.detail
                ));
            }
            out
        }
        OutputFormat::Json => {
            #[derive(serde::Serialize)]
            struct Row<'a> {
                id: u32,
                name: &'a str,
                module: &'a str,
                passed: bool,
                max_err: f64,
                tolerance: f64,
                detail: &'a str,
            }
            let rows: Vec<Row> = results
                .iter()
                .map(|r| Row {
                    id: r.id,
                    name: r.name,
                    module: r.module,
                    passed: r.passed,
                    max_err: r.max_err,
                    tolerance: r.tolerance,
                    detail: &r.detail,
                })
                .collect();
            serde_json::to_string_pretty(&rows).expect("suite report serializes")
        }
    };
    if let Some(path) = &args.out {
        if let Err(e) = std::fs::File::create(path).and_then(|mut f| f.write_all(body.as_bytes())) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_DOMAIN;
        }
    }
    if all_pass {
        EXIT_OK
    } else {
        EXIT_TOLERANCE
    }
}
