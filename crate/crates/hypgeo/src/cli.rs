//! Command-line surface: coefficient dumps, predicate checks, identity
//! audits, certified evaluation, membership evidence, and region scans.
//!
//! Exit status: `0` when the primary query is affirmative (verdict holds,
//! audit passes, evaluation/evidence succeeds), `1` for a negative verdict
//! or failed evaluation, `2` for usage and parse errors. Reports print as
//! human-readable tables by default; `--format json` (and `--format csv`
//! for scans) switch to machine form. Every rational is serialized as an
//! exact `p/q` string; evaluation reals carry 17 significant digits.
//!
//! The environment variable `HYPGEO_MAX_TERMS` caps the series length used
//! by the evaluator (default 100000).

use crate::analytic::{
    disk_minimum, eval_derivative, eval_series, ComplexPoint, DiskEvidence, DiskFunctional,
    EvalOptions, EvalResult, GridSpec,
};
use crate::criteria::{
    predicate, proof_identity_audit, PredicateVerdict, ProofAuditReport, Theorem,
};
use crate::params::ParameterSet;
use crate::rational::{parse_rational, Rational};
use crate::scanner::{
    find_satisfying, run_scan, AxisSpec, ConditionName, ParamName, ScanOptions, SliceSpec,
};
use crate::series::{build_sequence, SequenceKind};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::io::Write;

/// Exit code for an affirmative verdict or successful query.
pub const EXIT_OK: i32 = 0;
/// Exit code for a negative verdict or failed evaluation.
pub const EXIT_NEGATIVE: i32 = 1;
/// Exit code for usage and parse errors.
pub const EXIT_USAGE: i32 = 2;

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Normalized,
    #[value(name = "odd-embedded", alias = "odd")]
    OddEmbedded,
    Alexander,
}

impl From<KindArg> for SequenceKind {
    fn from(value: KindArg) -> Self {
        match value {
            KindArg::Normalized => SequenceKind::Normalized,
            KindArg::OddEmbedded => SequenceKind::OddEmbedded,
            KindArg::Alexander => SequenceKind::Alexander,
        }
    }
}

/// Five positional parameter values a b c d e (each `p/q`, integer, or
/// finite decimal).
#[derive(Debug, Clone, Args)]
pub struct ParamsArg {
    #[arg(long, num_args = 5, value_names = ["A", "B", "C", "D", "E"], value_parser = rational_arg)]
    pub params: Vec<Rational>,
}

impl ParamsArg {
    fn build(&self) -> Result<ParameterSet, String> {
        let [a, b, c, d, e]: [Rational; 5] = self
            .params
            .clone()
            .try_into()
            .map_err(|_| "exactly five parameter values are required".to_owned())?;
        ParameterSet::new(a, b, c, d, e).map_err(|e| e.to_string())
    }
}

/// A parsed command-line invocation.
#[derive(Debug, Parser)]
#[command(
    name = "hypgeo",
    about = "Exact sufficient-condition checks and certified disk evaluation for z·3F2(a,b,c;d,e;z)",
    version
)]
pub struct Invocation {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the exact coefficients A_1..A_N of a series.
    Coeffs {
        #[command(flatten)]
        params: ParamsArg,
        /// Number of coefficients to print.
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Normalized)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
    },
    /// Evaluate the sufficient-condition predicates at a parameter tuple.
    Check {
        #[command(flatten)]
        params: ParamsArg,
        /// Theorem number 1-4, or "all".
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
    },
    /// Audit the closed-form difference identities exactly over n = 1..N.
    Audit {
        #[command(flatten)]
        params: ParamsArg,
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Largest index checked.
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
    },
    /// Evaluate the series (or its derivative) at a disk point with a
    /// certified truncation bound.
    Eval {
        #[command(flatten)]
        params: ParamsArg,
        #[arg(long, value_enum, default_value_t = KindArg::Normalized)]
        kind: KindArg,
        /// Evaluation point "re" or "re,im" (rational components).
        #[arg(long)]
        z: String,
        /// Certified-bound target.
        #[arg(long, default_value = "1/1000000000000", value_parser = rational_arg)]
        tol: Rational,
        /// Evaluate the termwise derivative instead of the sum.
        #[arg(long, default_value_t = false)]
        derivative: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
    },
    /// Sample the membership functionals (close-to-convexity w.r.t.
    /// -log(1-z), and starlikeness) over a polar grid.
    Evidence {
        #[command(flatten)]
        params: ParamsArg,
        /// normalized or alexander.
        #[arg(long, value_enum, default_value_t = KindArg::Normalized)]
        kind: KindArg,
        #[arg(long, default_value_t = 64)]
        nr: usize,
        #[arg(long, default_value_t = 256)]
        ntheta: usize,
        #[arg(long, default_value = "19/20", value_parser = rational_arg)]
        rmax: Rational,
        #[arg(long, default_value = "1/1000000000000", value_parser = rational_arg)]
        tol: Rational,
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
    },
    /// Sweep a 2-D parameter slice and classify every cell.
    Scan {
        /// Fixed parameter, e.g. --fix a=1 (exactly three).
        #[arg(long = "fix", value_name = "NAME=VALUE", num_args = 1)]
        fixed: Vec<String>,
        /// Swept axis, e.g. --axis d=1:3:2 (exactly two; start:stop:steps).
        #[arg(long = "axis", value_name = "NAME=START:STOP:STEPS", num_args = 1)]
        axes: Vec<String>,
        /// Run the chain checks per cell.
        #[arg(long, default_value_t = false)]
        lemmas: bool,
        /// Prefix length for the chain checks.
        #[arg(long, default_value_t = 200)]
        lemma_length: usize,
        /// Sample disk evidence per cell (costly).
        #[arg(long, default_value_t = false)]
        disk: bool,
        /// Report only the first cell satisfying this condition
        /// (thm1..thm4, thm3_with_thm1, thm4_with_proof_conditions).
        #[arg(long)]
        find: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
}

fn theorems_argument(text: &str) -> Result<Vec<Theorem>, String> {
    if text.eq_ignore_ascii_case("all") {
        return Ok(Theorem::ALL.to_vec());
    }
    text.parse::<u8>()
        .ok()
        .and_then(Theorem::from_number)
        .map(|t| vec![t])
        .ok_or_else(|| format!("--theorem must be 1..4 or \"all\", got {text:?}"))
}

fn max_terms_from_env() -> Result<usize, String> {
    match std::env::var("HYPGEO_MAX_TERMS") {
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("HYPGEO_MAX_TERMS must be a positive integer, got {text:?}")),
        Err(_) => Ok(EvalOptions::default().max_terms),
    }
}

fn parse_z(text: &str) -> Result<(Rational, Rational, ComplexPoint), String> {
    let (re_text, im_text) = match text.split_once(',') {
        Some((re, im)) => (re, im),
        None => (text, "0"),
    };
    let re = rational_arg(re_text)?;
    let im = rational_arg(im_text)?;
    let point = ComplexPoint::from_rational(&re, &im).map_err(|e| e.to_string())?;
    Ok((re, im, point))
}

/// 17-significant-digit decimal rendering used for evaluation reals.
fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

fn params_json(params: &ParameterSet) -> Value {
    json!({
        "a": params.a().to_string(),
        "b": params.b().to_string(),
        "c": params.c().to_string(),
        "d": params.d().to_string(),
        "e": params.e().to_string(),
    })
}

fn eval_result_json(result: &EvalResult) -> Value {
    json!({
        "value": {
            "re": sig17(result.value.re.to_f64()),
            "im": sig17(result.value.im.to_f64()),
        },
        "truncation_bound": sig17(result.truncation_bound.to_f64()),
        "terms_used": result.terms_used,
    })
}

fn evidence_json(evidence: &DiskEvidence) -> Value {
    json!({
        "functional": evidence.functional.to_string(),
        "grid": {
            "n_r": evidence.grid.n_r,
            "n_theta": evidence.grid.n_theta,
            "r_max": evidence.grid.r_max.to_string(),
        },
        "min_value": sig17(evidence.min_value.to_f64()),
        "argmin": {
            "re": sig17(evidence.argmin.re().to_f64()),
            "im": sig17(evidence.argmin.im().to_f64()),
        },
        "error_budget": sig17(evidence.error_budget.to_f64()),
        "positive": evidence.positive,
        "skipped_nodes": evidence.skipped_nodes,
    })
}

fn print_verdict_human(out: &mut impl Write, verdict: &PredicateVerdict) -> std::io::Result<()> {
    writeln!(out, "theorem {}  {}", verdict.theorem, verdict.params)?;
    for part in &verdict.parts {
        writeln!(
            out,
            "  [{}] {:<42} lhs = {}  rhs = {}",
            if part.satisfied { "ok" } else { "FAIL" },
            part.name,
            part.lhs,
            part.rhs
        )?;
    }
    for (flag, value) in &verdict.variant_flags {
        writeln!(out, "  flag {flag} = {value}")?;
    }
    writeln!(
        out,
        "  overall: {}",
        if verdict.overall {
            "satisfied"
        } else {
            "not satisfied"
        }
    )?;
    Ok(())
}

fn print_audit_human(out: &mut impl Write, report: &ProofAuditReport) -> std::io::Result<()> {
    let negatives: Vec<usize> = report
        .nonnegativity
        .iter()
        .filter(|e| !e.nonneg)
        .map(|e| e.n)
        .collect();
    writeln!(
        out,
        "audit {}  {}  n = {}..{}",
        report.theorem, report.params, report.range.0, report.range.1
    )?;
    writeln!(
        out,
        "  identity: {}",
        if report.identity_ok {
            "exact match at every checked index"
        } else {
            "MISMATCH"
        }
    )?;
    match negatives.first() {
        None => writeln!(out, "  polynomial nonnegative at all checked indices")?,
        Some(first) => writeln!(
            out,
            "  polynomial negative at {} of {} indices (first at n = {})",
            negatives.len(),
            report.nonnegativity.len(),
            first
        )?,
    }
    Ok(())
}

fn audit_json(report: &ProofAuditReport) -> Value {
    serde_json::to_value(report).expect("audit report serializes")
}

struct ScanArgs {
    spec: SliceSpec,
    find: Option<ConditionName>,
    format: OutputFormat,
    output: Option<std::path::PathBuf>,
}

fn parse_scan_args(
    fixed: &[String],
    axes: &[String],
    lemmas: bool,
    lemma_length: usize,
    disk: bool,
    find: &Option<String>,
    format: OutputFormat,
    output: Option<std::path::PathBuf>,
) -> Result<ScanArgs, String> {
    if fixed.len() != 3 {
        return Err(format!("expected exactly three --fix arguments, got {}", fixed.len()));
    }
    if axes.len() != 2 {
        return Err(format!("expected exactly two --axis arguments, got {}", axes.len()));
    }
    let mut fixed_map = BTreeMap::new();
    for item in fixed {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| format!("--fix expects NAME=VALUE, got {item:?}"))?;
        let name = ParamName::parse(name).ok_or_else(|| format!("unknown parameter {name:?}"))?;
        fixed_map.insert(name, rational_arg(value)?);
    }
    let mut axis_specs = Vec::new();
    for item in axes {
        let (name, range) = item
            .split_once('=')
            .ok_or_else(|| format!("--axis expects NAME=START:STOP:STEPS, got {item:?}"))?;
        let name = ParamName::parse(name).ok_or_else(|| format!("unknown parameter {name:?}"))?;
        let pieces: Vec<&str> = range.split(':').collect();
        if pieces.len() != 3 {
            return Err(format!("--axis expects START:STOP:STEPS, got {range:?}"));
        }
        let start = rational_arg(pieces[0])?;
        let stop = rational_arg(pieces[1])?;
        let steps: usize = pieces[2]
            .parse()
            .map_err(|_| format!("steps must be a nonnegative integer, got {:?}", pieces[2]))?;
        axis_specs.push(AxisSpec {
            name,
            start,
            stop,
            steps,
        });
    }
    let axes: [AxisSpec; 2] = axis_specs.try_into().expect("length checked");
    let options = ScanOptions {
        run_lemmas: lemmas,
        lemma_length,
        run_disk: disk,
        ..ScanOptions::default()
    };
    let spec = SliceSpec::new(fixed_map, axes, options).map_err(|e| e.to_string())?;
    let find = match find {
        Some(text) => Some(ConditionName::parse(text).map_err(|e| e.to_string())?),
        None => None,
    };
    Ok(ScanArgs {
        spec,
        find,
        format,
        output,
    })
}

/// Runs a parsed invocation, writing the report to `out`. Returns the
/// process exit code.
pub fn run(invocation: &Invocation, out: &mut impl Write) -> i32 {
    match execute(invocation, out) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    }
}

fn ensure_not_csv(format: OutputFormat) -> Result<(), String> {
    if format == OutputFormat::Csv {
        return Err("--format csv is only available for scan".to_owned());
    }
    Ok(())
}

fn execute(invocation: &Invocation, out: &mut impl Write) -> Result<i32, String> {
    let io_err = |e: std::io::Error| format!("write failed: {e}");
    match &invocation.command {
        Command::Coeffs {
            params,
            n,
            kind,
            format,
        } => {
            ensure_not_csv(*format)?;
            let params = params.build()?;
            if *n < 1 {
                return Err("--n must be at least 1".to_owned());
            }
            let kind: SequenceKind = (*kind).into();
            let values: Vec<String> = if *n == 1 {
                vec!["1".to_owned()]
            } else {
                build_sequence(&params, *n, kind)
                    .values()
                    .iter()
                    .map(|v| v.to_string())
                    .collect()
            };
            match format {
                OutputFormat::Json => {
                    let report = json!({
                        "command": "coeffs",
                        "params": params_json(&params),
                        "kind": kind.to_string(),
                        "values": values,
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap())
                        .map_err(io_err)?;
                }
                _ => writeln!(out, "{}", values.join(", ")).map_err(io_err)?,
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            params,
            theorem,
            format,
        } => {
            ensure_not_csv(*format)?;
            let params = params.build()?;
            let theorems = theorems_argument(theorem)?;
            let verdicts: Result<Vec<PredicateVerdict>, _> =
                theorems.iter().map(|&t| predicate(t, &params)).collect();
            let verdicts = verdicts.map_err(|e| e.to_string())?;
            let affirmative = verdicts.iter().all(|v| v.overall);
            match format {
                OutputFormat::Json => {
                    let report = json!({
                        "command": "check",
                        "verdicts": serde_json::to_value(&verdicts).unwrap(),
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap())
                        .map_err(io_err)?;
                }
                _ => {
                    for verdict in &verdicts {
                        print_verdict_human(out, verdict).map_err(io_err)?;
                    }
                }
            }
            Ok(if affirmative { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Audit {
            params,
            theorem,
            n,
            format,
        } => {
            ensure_not_csv(*format)?;
            let params = params.build()?;
            if *n < 2 {
                return Err("--n must be at least 2".to_owned());
            }
            let theorems = theorems_argument(theorem)?;
            let reports: Vec<ProofAuditReport> = theorems
                .iter()
                .map(|&t| proof_identity_audit(t, &params, *n))
                .collect();
            let affirmative = reports.iter().all(|r| r.identity_ok);
            match format {
                OutputFormat::Json => {
                    let report = json!({
                        "command": "audit",
                        "reports": reports.iter().map(audit_json).collect::<Vec<_>>(),
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap())
                        .map_err(io_err)?;
                }
                _ => {
                    for report in &reports {
                        print_audit_human(out, report).map_err(io_err)?;
                    }
                }
            }
            Ok(if affirmative { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Eval {
            params,
            kind,
            z,
            tol,
            derivative,
            format,
        } => {
            ensure_not_csv(*format)?;
            let params = params.build()?;
            let (z_re, z_im, z_parsed) = parse_z(z)?;
            let opts = EvalOptions {
                tol: tol.clone(),
                max_terms: max_terms_from_env()?,
            };
            let kind: SequenceKind = (*kind).into();
            let seq = build_sequence(&params, 2, kind);
            let outcome = if *derivative {
                eval_derivative(&seq, &z_parsed, &opts)
            } else {
                eval_series(&seq, &z_parsed, &opts)
            };
            let result = match outcome {
                Ok(r) => r,
                Err(e) => {
                    writeln!(out, "evaluation failed: {e}").map_err(io_err)?;
                    return Ok(EXIT_NEGATIVE);
                }
            };
            match format {
                OutputFormat::Json => {
                    let mut report = json!({
                        "command": "eval",
                        "params": params_json(&params),
                        "kind": kind.to_string(),
                        "z": { "re": z_re.to_string(), "im": z_im.to_string() },
                        "derivative": *derivative,
                    });
                    report
                        .as_object_mut()
                        .unwrap()
                        .extend(eval_result_json(&result).as_object().unwrap().clone());
                    writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap())
                        .map_err(io_err)?;
                }
                _ => {
                    writeln!(
                        out,
                        "value = {} + {} i",
                        sig17(result.value.re.to_f64()),
                        sig17(result.value.im.to_f64())
                    )
                    .map_err(io_err)?;
                    writeln!(
                        out,
                        "truncation_bound = {}",
                        sig17(result.truncation_bound.to_f64())
                    )
                    .map_err(io_err)?;
                    writeln!(out, "terms_used = {}", result.terms_used).map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Evidence {
            params,
            kind,
            nr,
            ntheta,
            rmax,
            tol,
            format,
        } => {
            ensure_not_csv(*format)?;
            let params = params.build()?;
            let kind: SequenceKind = (*kind).into();
            if kind == SequenceKind::OddEmbedded {
                return Err("evidence supports --kind normalized or alexander".to_owned());
            }
            let grid = GridSpec {
                n_r: *nr,
                n_theta: *ntheta,
                r_max: rmax.clone(),
            };
            let opts = EvalOptions {
                tol: tol.clone(),
                max_terms: max_terms_from_env()?,
            };
            let seq = build_sequence(&params, 2, kind);
            let run_one = |functional| disk_minimum(&seq, functional, &grid, &opts);
            let (ctc, star) = match (run_one(DiskFunctional::CtcLog), run_one(DiskFunctional::Starlike)) {
                (Ok(c), Ok(s)) => (c, s),
                (Err(e), _) | (_, Err(e)) => {
                    writeln!(out, "evidence failed: {e}").map_err(io_err)?;
                    return Ok(EXIT_NEGATIVE);
                }
            };
            let affirmative = ctc.positive && star.positive;
            match format {
                OutputFormat::Json => {
                    let report = json!({
                        "command": "evidence",
                        "params": params_json(&params),
                        "kind": kind.to_string(),
                        "ctc_log": evidence_json(&ctc),
                        "starlike": evidence_json(&star),
                        "supported": affirmative,
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap())
                        .map_err(io_err)?;
                }
                _ => {
                    for evidence in [&ctc, &star] {
                        writeln!(
                            out,
                            "{}: min = {} at ({}, {}), budget = {}, positive = {}{}",
                            evidence.functional,
                            sig17(evidence.min_value.to_f64()),
                            sig17(evidence.argmin.re().to_f64()),
                            sig17(evidence.argmin.im().to_f64()),
                            sig17(evidence.error_budget.to_f64()),
                            evidence.positive,
                            if evidence.skipped_nodes > 0 {
                                format!(" ({} nodes skipped)", evidence.skipped_nodes)
                            } else {
                                String::new()
                            }
                        )
                        .map_err(io_err)?;
                    }
                    writeln!(out, "membership supported: {affirmative}").map_err(io_err)?;
                }
            }
            Ok(if affirmative { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Scan {
            fixed,
            axes,
            lemmas,
            lemma_length,
            disk,
            find,
            format,
            output,
        } => {
            let args = parse_scan_args(
                fixed,
                axes,
                *lemmas,
                *lemma_length,
                *disk,
                find,
                *format,
                output.clone(),
            )?;
            if let Some(target) = args.find {
                return match find_satisfying(&args.spec, target) {
                    Some(params) => {
                        writeln!(out, "{target}: first satisfying cell {params}").map_err(io_err)?;
                        Ok(EXIT_OK)
                    }
                    None => {
                        writeln!(out, "{target}: no satisfying cell in the scanned box")
                            .map_err(io_err)?;
                        Ok(EXIT_NEGATIVE)
                    }
                };
            }
            let result = run_scan(&args.spec);
            let rendered = match args.format {
                OutputFormat::Json => {
                    let mut value = serde_json::to_value(&result).unwrap();
                    value
                        .as_object_mut()
                        .unwrap()
                        .insert("command".to_owned(), json!("scan"));
                    serde_json::to_string_pretty(&value).unwrap() + "\n"
                }
                _ => result.to_csv(),
            };
            match &args.output {
                Some(path) => {
                    std::fs::write(path, rendered).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    let mut counts: Vec<String> = result
                        .summary
                        .iter()
                        .map(|(k, v)| format!("{k}: {v}"))
                        .collect();
                    counts.sort();
                    writeln!(out, "scan complete, {} cells ({})", result.cells.len(), counts.join(", "))
                        .map_err(io_err)?;
                }
                None => {
                    write!(out, "{rendered}").map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Entry point used by the binary: parses `std::env::args`, runs, and
/// returns the exit code.
pub fn main() -> i32 {
    let invocation = match Invocation::try_parse() {
        Ok(inv) => inv,
        Err(err) => {
            // clap renders its own message; --help/--version exit cleanly
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = err.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    run(&invocation, &mut out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let invocation = match Invocation::try_parse_from(args) {
            Ok(inv) => inv,
            Err(_) => return (EXIT_USAGE, String::new()),
        };
        let mut buffer = Vec::new();
        let code = run(&invocation, &mut buffer);
        (code, String::from_utf8(buffer).unwrap())
    }

    #[test]
    fn check_theorem_one_affirmative() {
        let (code, output) = run_args(&[
            "hypgeo", "check", "--theorem", "1", "--params", "1", "1", "1", "2", "2",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(output.contains("overall: satisfied"));
    }

    #[test]
    fn check_theorem_three_negative_with_failing_part() {
        let (code, output) = run_args(&[
            "hypgeo", "check", "--theorem", "3", "--params", "1", "1", "1", "2", "2",
        ]);
        assert_eq!(code, EXIT_NEGATIVE);
        assert!(output.contains("d+e >= T2"));
        assert!(output.contains("lhs = 4"));
        assert!(output.contains("rhs = 18"));
        assert!(output.contains("overall: not satisfied"));
    }

    #[test]
    fn coeffs_dump_matches_contract() {
        let (code, output) = run_args(&[
            "hypgeo", "coeffs", "--params", "1", "1", "1", "2", "2", "--n", "4",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(output.trim(), "1, 1/4, 1/9, 1/16");
    }

    #[test]
    fn malformed_rational_is_usage_error() {
        let (code, _) = run_args(&[
            "hypgeo", "check", "--theorem", "1", "--params", "1", "abc", "1", "2", "2",
        ]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn audit_all_theorems() {
        let (code, output) = run_args(&[
            "hypgeo", "audit", "--params", "1", "1", "1", "2", "2", "--n", "10",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(output.contains("exact match"));
    }

    #[test]
    fn eval_json_round_trips_rationals() {
        let (code, output) = run_args(&[
            "hypgeo", "eval", "--params", "2", "3", "1", "2", "3", "--z", "3/10", "--format",
            "json",
        ]);
        assert_eq!(code, EXIT_OK);
        let value: Value = serde_json::from_str(&output).unwrap();
        assert_eq!(value["z"]["re"].as_str().unwrap(), "3/10");
        let reparsed = parse_rational(value["z"]["re"].as_str().unwrap()).unwrap();
        assert_eq!(reparsed, crate::rational::ratio(3, 10));
    }

    #[test]
    fn csv_format_is_scan_only() {
        let (code, _) = run_args(&[
            "hypgeo", "check", "--theorem", "1", "--params", "1", "1", "1", "2", "2",
            "--format", "csv",
        ]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn scan_find_reports_first_cell() {
        let (code, output) = run_args(&[
            "hypgeo", "scan", "--fix", "a=1", "--fix", "b=1", "--fix", "c=1", "--axis",
            "d=1:3:2", "--axis", "e=1:3:2", "--find", "thm1",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(output.contains("(1, 1, 1, 1, 2)"));
    }
}
