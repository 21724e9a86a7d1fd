//! Command-line surface.
//!
//! Four subcommands: `eval` prints exact polynomial values, `verify` runs the
//! identity engine over a degree range, `bounds` (alias `scan`) runs a
//! sup-norm scan, and `table` emits a value table as CSV or JSON.
//!
//! All numeric flags are exact rational strings (`-1/2`, `3`); no float flag
//! exists anywhere, so exactness survives end to end. Exit codes: 0 all
//! checks passed, 1 a mathematical violation was found, 2 usage or regime
//! error (with a one-line diagnostic naming the violated precondition).

use crate::bounds::{scan, BoundReport, BoundSpec};
use crate::exact::{decimal_string, format_rational, parse_rational, rat, Rational};
use crate::identities::{verify, verify_perturbed, IdentityId, IdentityParams, VerifyStatus};
use crate::polys::{
    chebyshev_eval, dual_hahn_eval, hahn_eval, krawtchouk_eval, ChebKind, HahnParams,
    KrawtchoukParams,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

/// Version tag carried by every JSON document this tool emits.
pub const JSON_SCHEMA_VERSION: u32 = 1;

const EXIT_OK: i32 = 0;
const EXIT_VIOLATION: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "dopoly",
    about = "Exact evaluation, identity verification, and bound scans for discrete orthogonal polynomials",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a polynomial family exactly at one or more points
    Eval(EvalArgs),
    /// Verify a sum-of-squares identity over a degree range
    Verify(VerifyArgs),
    /// Scan a sup-norm bound over its interval (alias: scan)
    #[command(visible_alias = "scan")]
    Bounds(BoundsArgs),
    /// Emit a value table (rows x, columns n) as CSV or JSON
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalFamily {
    Hahn,
    Krawtchouk,
    DualHahn,
    ChebyshevT,
    ChebyshevU,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Args)]
struct EvalArgs {
    /// Which family to evaluate
    #[arg(value_enum)]
    family: EvalFamily,
    /// Degree of the polynomial
    #[arg(long)]
    n: u32,
    /// Hahn/dual-Hahn alpha (exact rational)
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    /// Hahn/dual-Hahn beta (exact rational)
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    beta: Option<Rational>,
    /// Krawtchouk success probability p (exact rational in (0,1))
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    p: Option<Rational>,
    /// Support parameter N (the family lives on {0, ..., N})
    #[arg(long = "N", visible_alias = "big-n")]
    big_n: u32,
    /// Evaluation point(s), exact rationals (repeatable)
    #[arg(long = "x", value_parser = parse_rational, num_args = 1.., allow_hyphen_values = true)]
    x: Vec<Rational>,
    /// Spectral evaluation point(s) for dual-hahn (repeatable)
    #[arg(long = "lambda", value_parser = parse_rational, num_args = 1.., allow_hyphen_values = true)]
    lambda: Vec<Rational>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity tag: T31a-T31d, C36a, T41a-T41d, I24, I314
    tag: String,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    beta: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    p: Option<Rational>,
    #[arg(long = "N", visible_alias = "big-n")]
    big_n: u32,
    /// Check a single degree instead of the whole valid range
    #[arg(long)]
    n: Option<u32>,
    /// Cap the degree range at this value
    #[arg(long)]
    n_max: Option<u32>,
    /// Deliberately perturb the identity's right-hand constant (detector sanity check)
    #[arg(long)]
    self_test: bool,
}

#[derive(Args)]
struct BoundsArgs {
    /// Bound family: hahn32, hahn34, hahn-raw, eberlein38, dual39,
    /// krawtchouk42, cheb-t36b, cheb-u36c, zaremba
    family: String,
    /// Degree to scan
    #[arg(long)]
    n: u32,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    beta: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    p: Option<Rational>,
    #[arg(long = "N", visible_alias = "big-n")]
    big_n: u32,
    /// Grid step (exact rational, default 1/8)
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    step: Option<Rational>,
    #[arg(long, value_enum, default_value = "plain")]
    format: OutputFormat,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    /// Which family to tabulate
    #[arg(value_enum)]
    family: EvalFamily,
    /// Largest degree column
    #[arg(long)]
    n_max: u32,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    beta: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    p: Option<Rational>,
    #[arg(long = "N", visible_alias = "big-n")]
    big_n: u32,
    /// Evaluation points; defaults to the integers 0..=N
    #[arg(long = "x", value_parser = parse_rational, num_args = 1.., allow_hyphen_values = true)]
    x: Vec<Rational>,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Row of a value table; exact value plus a 12-significant-digit decimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub x: String,
    pub n: u32,
    pub value_exact: String,
    pub value_decimal: String,
}

/// JSON document for `table`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub schema: u32,
    pub family: String,
    pub params: Vec<(String, String)>,
    pub rows: Vec<TableRow>,
}

/// JSON document for `bounds`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsDoc {
    pub schema: u32,
    pub family: String,
    pub degree: u32,
    pub bound: String,
    pub threshold: Option<String>,
    pub threshold_ok: bool,
    pub grid_step: String,
    pub worst_point: String,
    pub worst_ratio: String,
    pub worst_ratio_decimal: String,
    pub violations: Vec<ViolationDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub x: String,
    pub value: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: msg.into(),
        }
    }
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version through this path too
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Table(args) => cmd_table(args),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn hahn_params(
    alpha: &Option<Rational>,
    beta: &Option<Rational>,
    big_n: u32,
) -> Result<HahnParams, Failure> {
    let alpha = alpha
        .clone()
        .ok_or_else(|| Failure::usage("--alpha is required for this family"))?;
    let beta = beta
        .clone()
        .ok_or_else(|| Failure::usage("--beta is required for this family"))?;
    Ok(HahnParams::infer(alpha, beta, big_n)?)
}

fn krawtchouk_params(p: &Option<Rational>, big_n: u32) -> Result<KrawtchoukParams, Failure> {
    let p = p
        .clone()
        .ok_or_else(|| Failure::usage("--p is required for this family"))?;
    Ok(KrawtchoukParams::new(p, big_n)?)
}

fn cmd_eval(args: EvalArgs) -> Result<i32, Failure> {
    let points: &[Rational] = match args.family {
        EvalFamily::DualHahn => {
            if !args.x.is_empty() {
                return Err(Failure::usage("dual-hahn takes --lambda, not --x"));
            }
            &args.lambda
        }
        _ => {
            if !args.lambda.is_empty() {
                return Err(Failure::usage("--lambda is only for dual-hahn"));
            }
            &args.x
        }
    };
    if points.is_empty() {
        return Err(Failure::usage(
            "no evaluation points given (use --x, or --lambda for dual-hahn)",
        ));
    }
    let mut points = points.to_vec();
    points.sort();
    let mut out = String::new();
    match args.family {
        EvalFamily::Hahn => {
            let p = hahn_params(&args.alpha, &args.beta, args.big_n)?;
            for x in &points {
                writeln!(out, "{}", format_rational(&hahn_eval(args.n, x, &p)?)).unwrap();
            }
        }
        EvalFamily::Krawtchouk => {
            let p = krawtchouk_params(&args.p, args.big_n)?;
            for x in &points {
                writeln!(out, "{}", format_rational(&krawtchouk_eval(args.n, x, &p)?)).unwrap();
            }
        }
        EvalFamily::DualHahn => {
            let p = hahn_params(&args.alpha, &args.beta, args.big_n)?;
            for lambda in &points {
                writeln!(
                    out,
                    "{}",
                    format_rational(&dual_hahn_eval(args.n, lambda, &p)?)
                )
                .unwrap();
            }
        }
        EvalFamily::ChebyshevT | EvalFamily::ChebyshevU => {
            let kind = if args.family == EvalFamily::ChebyshevT {
                ChebKind::T
            } else {
                ChebKind::U
            };
            for x in &points {
                writeln!(
                    out,
                    "{}",
                    format_rational(&chebyshev_eval(kind, args.n, x, args.big_n)?)
                )
                .unwrap();
            }
        }
    }
    print!("{out}");
    Ok(EXIT_OK)
}

fn identity_params(args: &VerifyArgs, id: IdentityId) -> Result<IdentityParams, Failure> {
    match id {
        IdentityId::C36a => Ok(IdentityParams::Chebyshev { n: args.big_n }),
        IdentityId::T41a | IdentityId::T41b | IdentityId::T41c | IdentityId::T41d => Ok(
            IdentityParams::Krawtchouk(krawtchouk_params(&args.p, args.big_n)?),
        ),
        _ => Ok(IdentityParams::Hahn(hahn_params(
            &args.alpha,
            &args.beta,
            args.big_n,
        )?)),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, Failure> {
    let id: IdentityId = args.tag.parse()?;
    let params = identity_params(&args, id)?;
    let full = id.degree_range(args.big_n);
    let degrees: Vec<u32> = match args.n {
        Some(n) => {
            if !full.contains(&n) {
                return Err(Failure::usage(format!(
                    "degree {n} outside the valid range {}..={} of {id}",
                    full.start(),
                    full.end()
                )));
            }
            vec![n]
        }
        None => full
            .filter(|n| args.n_max.is_none_or(|cap| *n <= cap))
            .collect(),
    };
    if degrees.is_empty() {
        return Err(Failure::usage(format!(
            "{id} has no valid degree at N = {}",
            args.big_n
        )));
    }
    let mut all_proved = true;
    for degree in degrees {
        let result = if args.self_test {
            verify_perturbed(id, &params, degree)?
        } else {
            verify(id, &params, degree)?
        };
        match &result.status {
            VerifyStatus::ProvedZero => {
                println!(
                    "{id} n={degree}: proved-zero ({} points)",
                    result.points_checked
                );
            }
            VerifyStatus::NonzeroResidual { witness, residual } => {
                all_proved = false;
                println!(
                    "{id} n={degree}: NONZERO residual {} at x = {}",
                    format_rational(residual),
                    format_rational(witness)
                );
            }
        }
    }
    Ok(if all_proved { EXIT_OK } else { EXIT_VIOLATION })
}

fn build_bound_spec(args: &BoundsArgs) -> Result<BoundSpec, Failure> {
    let spec = match args.family.as_str() {
        "hahn32" => BoundSpec::hahn32(args.n, hahn_params(&args.alpha, &args.beta, args.big_n)?)?,
        "hahn34" => BoundSpec::hahn34(args.n, hahn_params(&args.alpha, &args.beta, args.big_n)?)?,
        "hahn-raw" => BoundSpec::hahn_raw(args.n, hahn_params(&args.alpha, &args.beta, args.big_n)?)?,
        "eberlein38" => {
            BoundSpec::eberlein38(args.n, hahn_params(&args.alpha, &args.beta, args.big_n)?)?
        }
        "dual39" => BoundSpec::dual39(args.n, hahn_params(&args.alpha, &args.beta, args.big_n)?)?,
        "krawtchouk42" => BoundSpec::krawtchouk42(args.n, krawtchouk_params(&args.p, args.big_n)?)?,
        "cheb-t36b" => BoundSpec::cheb_t(args.n, args.big_n)?,
        "cheb-u36c" => BoundSpec::cheb_u(args.n, args.big_n)?,
        "zaremba" => BoundSpec::zaremba(args.n, hahn_params(&args.alpha, &args.beta, args.big_n)?)?,
        other => {
            return Err(Failure::usage(format!(
                "unknown bound family `{other}` (expected hahn32, hahn34, hahn-raw, eberlein38, dual39, krawtchouk42, cheb-t36b, cheb-u36c, zaremba)"
            )))
        }
    };
    Ok(spec)
}

fn bounds_doc(report: &BoundReport) -> BoundsDoc {
    BoundsDoc {
        schema: JSON_SCHEMA_VERSION,
        family: report.spec.family.name().to_string(),
        degree: report.spec.degree,
        bound: format_rational(&report.spec.bound_value),
        threshold: report.spec.threshold_text(),
        threshold_ok: report.spec.threshold_ok,
        grid_step: format_rational(&report.grid_step),
        worst_point: format_rational(&report.worst_point),
        worst_ratio: format_rational(&report.worst_ratio),
        worst_ratio_decimal: decimal_string(&report.worst_ratio, 12),
        violations: report
            .violations
            .iter()
            .map(|(x, value)| ViolationDoc {
                x: format_rational(x),
                value: format_rational(value),
            })
            .collect(),
    }
}

fn cmd_bounds(args: BoundsArgs) -> Result<i32, Failure> {
    let spec = build_bound_spec(&args)?;
    let step = args.step.clone().unwrap_or_else(|| rat(1, 8));
    let report = scan(&spec, &step)?;
    let doc = bounds_doc(&report);
    let rendered = match args.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
        OutputFormat::Plain | OutputFormat::Csv => {
            let mut s = String::new();
            writeln!(s, "family: {}", doc.family).unwrap();
            writeln!(s, "degree: {}", doc.degree).unwrap();
            writeln!(s, "bound: {}", doc.bound).unwrap();
            if let Some(t) = &doc.threshold {
                writeln!(s, "threshold: {t}").unwrap();
            }
            writeln!(s, "threshold_ok: {}", doc.threshold_ok).unwrap();
            writeln!(s, "grid_step: {}", doc.grid_step).unwrap();
            writeln!(
                s,
                "worst_ratio: {} ({})",
                doc.worst_ratio, doc.worst_ratio_decimal
            )
            .unwrap();
            writeln!(s, "worst_point: {}", doc.worst_point).unwrap();
            if doc.violations.is_empty() {
                writeln!(s, "violations: none").unwrap();
            } else {
                writeln!(s, "violations: {}", doc.violations.len()).unwrap();
                for v in &doc.violations {
                    writeln!(s, "  x = {}, value = {}", v.x, v.value).unwrap();
                }
            }
            s
        }
    };
    emit(&args.output, &rendered)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn cmd_table(args: TableArgs) -> Result<i32, Failure> {
    if args.family == EvalFamily::DualHahn && args.x.is_empty() {
        return Err(Failure::usage(
            "table for dual-hahn needs explicit --x (spectral points)",
        ));
    }
    let mut points: Vec<Rational> = if args.x.is_empty() {
        (0..=args.big_n)
            .map(|x| crate::exact::int(x as i64))
            .collect()
    } else {
        args.x.clone()
    };
    points.sort();
    points.dedup();
    if points.is_empty() {
        return Err(Failure::usage("empty x range"));
    }
    if args.n_max > args.big_n {
        return Err(Failure::usage(format!(
            "n-max {} exceeds the family size (max {})",
            args.n_max, args.big_n
        )));
    }
    let mut family_name = String::new();
    let mut params_doc: Vec<(String, String)> = vec![("N".into(), args.big_n.to_string())];
    let family_tag = match args.family {
        EvalFamily::Hahn => crate::polys::Family::Hahn,
        EvalFamily::Krawtchouk => crate::polys::Family::Krawtchouk,
        EvalFamily::DualHahn => crate::polys::Family::DualHahn,
        EvalFamily::ChebyshevT => crate::polys::Family::ChebyshevT,
        EvalFamily::ChebyshevU => crate::polys::Family::ChebyshevU,
    };
    let value_at: Box<dyn Fn(u32, &Rational) -> Result<Rational, Failure>> = match args.family {
        EvalFamily::Hahn => {
            let p = hahn_params(&args.alpha, &args.beta, args.big_n)?;
            family_name.push_str("hahn");
            params_doc.push(("alpha".into(), format_rational(&p.alpha)));
            params_doc.push(("beta".into(), format_rational(&p.beta)));
            Box::new(move |n, x| Ok(hahn_eval(n, x, &p)?))
        }
        EvalFamily::Krawtchouk => {
            let p = krawtchouk_params(&args.p, args.big_n)?;
            family_name.push_str("krawtchouk");
            params_doc.push(("p".into(), format_rational(&p.p)));
            Box::new(move |n, x| Ok(krawtchouk_eval(n, x, &p)?))
        }
        EvalFamily::DualHahn => {
            let p = hahn_params(&args.alpha, &args.beta, args.big_n)?;
            family_name.push_str("dual-hahn");
            params_doc.push(("alpha".into(), format_rational(&p.alpha)));
            params_doc.push(("beta".into(), format_rational(&p.beta)));
            Box::new(move |n, x| Ok(dual_hahn_eval(n, x, &p)?))
        }
        EvalFamily::ChebyshevT => {
            family_name.push_str("chebyshev-t");
            let n = args.big_n;
            Box::new(move |d, x| Ok(chebyshev_eval(ChebKind::T, d, x, n)?))
        }
        EvalFamily::ChebyshevU => {
            family_name.push_str("chebyshev-u");
            let n = args.big_n;
            Box::new(move |d, x| Ok(chebyshev_eval(ChebKind::U, d, x, n)?))
        }
    };
    let mut rows = Vec::new();
    for x in &points {
        for n in 0..=args.n_max {
            let value = crate::polys::PolyValue {
                family: family_tag,
                degree: n,
                point: x.clone(),
                value: value_at(n, x)?,
            };
            rows.push(TableRow {
                x: format_rational(&value.point),
                n: value.degree,
                value_exact: format_rational(&value.value),
                value_decimal: decimal_string(&value.value, 12),
            });
        }
    }
    let rendered = match args.format {
        OutputFormat::Json => {
            let doc = TableDoc {
                schema: JSON_SCHEMA_VERSION,
                family: family_name,
                params: params_doc,
                rows,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
        OutputFormat::Plain | OutputFormat::Csv => {
            let mut s = String::from("x,n,value_exact,value_decimal\n");
            for r in &rows {
                writeln!(s, "{},{},{},{}", r.x, r.n, r.value_exact, r.value_decimal).unwrap();
            }
            s
        }
    };
    emit(&args.output, &rendered)?;
    Ok(EXIT_OK)
}

fn emit(target: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match target {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(content.as_bytes())
            .map_err(|e| Failure::usage(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_docs_round_trip() {
        let doc = TableDoc {
            schema: JSON_SCHEMA_VERSION,
            family: "hahn".into(),
            params: vec![("N".into(), "4".into()), ("alpha".into(), "-1/2".into())],
            rows: vec![TableRow {
                x: "2".into(),
                n: 2,
                value_exact: "-5/3".into(),
                value_decimal: "-1.66666666667".into(),
            }],
        };
        let s = serde_json::to_string(&doc).unwrap();
        assert_eq!(serde_json::from_str::<TableDoc>(&s).unwrap(), doc);

        let b = BoundsDoc {
            schema: JSON_SCHEMA_VERSION,
            family: "hahn-raw".into(),
            degree: 2,
            bound: "1".into(),
            threshold: Some("(2 + sqrt(2))/2".into()),
            threshold_ok: false,
            grid_step: "1".into(),
            worst_point: "2".into(),
            worst_ratio: "5/3".into(),
            worst_ratio_decimal: "1.66666666667".into(),
            violations: vec![ViolationDoc {
                x: "2".into(),
                value: "-5/3".into(),
            }],
        };
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(serde_json::from_str::<BoundsDoc>(&s).unwrap(), b);
    }

    #[test]
    fn run_reports_usage_errors() {
        // unknown bound family
        let code = run(["dopoly", "bounds", "nope", "--n", "1", "--N", "4"]);
        assert_eq!(code, 2);
        // missing required parameter
        let code = run(["dopoly", "eval", "hahn", "--n", "1", "--N", "4", "--x", "1"]);
        assert_eq!(code, 2);
    }
}
