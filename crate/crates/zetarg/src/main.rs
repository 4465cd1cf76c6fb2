//! Command-line front end: compute bounds, optimize parameters, reproduce
//! the comparison table, and run the verification suites.
//!
//! Exit codes: 0 success, 2 invalid flags, 3 domain errors, 4 crossover
//! bracket without a sign change, 5 verification violations.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

use zetarg::bounds::{backlund_bound, backlund_slope, rosser_bound, BoundParams, LinearBound};
use zetarg::critline::CriticalLineBound;
use zetarg::error::Error;
use zetarg::optimize::{
    build_table, crossover_height, default_heights, minimize_bound, OptimizeMode, TableRow,
};
use zetarg::refvals;
use zetarg::report::{sig6, ReportEnvelope};
use zetarg::verify::{check_bounds_empirically, check_lemmas, scan_zeros, MAX_SCAN_HEIGHT};

#[derive(Parser)]
#[command(
    name = "zetarg",
    version,
    about = "Explicit bounds for S(T), the argument of the Riemann zeta-function"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Also write the rendered report to a file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundMode {
    Convexity,
    ChengGraham,
    Custom,
    Rosser,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchMode {
    Convexity,
    ChengGraham,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a + b log T for explicit parameters.
    Bound {
        #[arg(long)]
        t0: f64,
        #[arg(long, value_enum)]
        mode: BoundMode,
        /// Strip half-width, required except for --mode rosser.
        #[arg(long)]
        eta: Option<f64>,
        /// Log-absorption rate, required for --mode cheng-graham.
        #[arg(long)]
        delta: Option<f64>,
        /// Critical-line exponent, required for --mode custom.
        #[arg(long)]
        theta: Option<f64>,
        /// Critical-line prefactor for --mode custom; omit for a
        /// coefficient-only certificate (slope only).
        #[arg(long = "B")]
        prefactor: Option<f64>,
    },
    /// Minimize a + b log t0 over the free parameters.
    Optimize {
        #[arg(long)]
        t0: f64,
        #[arg(long, value_enum)]
        mode: SearchMode,
    },
    /// The comparison table across heights.
    Table {
        /// Comma-separated heights; defaults to the eight published ones.
        #[arg(long = "t0-list", value_delimiter = ',')]
        t0_list: Option<Vec<f64>>,
    },
    /// Locate where the subconvexity-optimized slope overtakes the
    /// convexity-optimized one.
    Crossover {
        #[arg(long)]
        lo: f64,
        #[arg(long)]
        hi: f64,
    },
    /// Empirical verification suites.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Scan zeros, compute S(t) directly, and check the bounds against it.
    S {
        #[arg(long = "t-max", default_value_t = 1000.0)]
        t_max: f64,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
    },
    /// Random-sample domination checks of the supporting estimates.
    Lemmas {
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::NoSignChange { .. } => ExitCode::from(4),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Bound {
            t0,
            mode,
            eta,
            delta,
            theta,
            prefactor,
        } => cmd_bound(cli, *t0, *mode, *eta, *delta, *theta, *prefactor),
        Command::Optimize { t0, mode } => cmd_optimize(cli, *t0, *mode),
        Command::Table { t0_list } => cmd_table(cli, t0_list.clone()),
        Command::Crossover { lo, hi } => cmd_crossover(cli, *lo, *hi),
        Command::Verify { suite } => match suite {
            VerifySuite::S { t_max, samples } => cmd_verify_s(cli, *t_max, *samples),
            VerifySuite::Lemmas { samples, seed } => cmd_verify_lemmas(cli, *samples, *seed),
        },
    }
}

/// Missing or inconsistent flags are usage errors (exit 2), matching what
/// clap does for unparseable ones.
fn flag_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn require_flag(value: Option<f64>, name: &str) -> Result<f64, ExitCode> {
    value.ok_or_else(|| flag_error(&format!("--{name} is required for this mode")))
}

fn cmd_bound(
    cli: &Cli,
    t0: f64,
    mode: BoundMode,
    eta: Option<f64>,
    delta: Option<f64>,
    theta: Option<f64>,
    prefactor: Option<f64>,
) -> Result<ExitCode, Error> {
    let mut envelope = ReportEnvelope::new("bound").input("t0", t0);

    let (bound, slope_only): (Option<LinearBound>, Option<f64>) = match mode {
        BoundMode::Rosser => {
            envelope = envelope.input("mode", "rosser").reference(refvals::CITE_ROSSER);
            (Some(rosser_bound(t0)?), None)
        }
        BoundMode::Convexity | BoundMode::ChengGraham | BoundMode::Custom => {
            let eta = match require_flag(eta, "eta") {
                Ok(v) => v,
                Err(code) => return Ok(code),
            };
            envelope = envelope.input("eta", eta);
            let cert = match mode {
                BoundMode::Convexity => {
                    envelope = envelope
                        .input("mode", "convexity")
                        .reference(refvals::CITE_CONVEXITY);
                    CriticalLineBound::convexity()
                }
                BoundMode::ChengGraham => {
                    let delta = match require_flag(delta, "delta") {
                        Ok(v) => v,
                        Err(code) => return Ok(code),
                    };
                    envelope = envelope
                        .input("mode", "cheng-graham")
                        .input("delta", delta)
                        .reference(refvals::CITE_CHENG_GRAHAM);
                    CriticalLineBound::cheng_graham(delta)?
                }
                BoundMode::Custom => {
                    let theta = match require_flag(theta, "theta") {
                        Ok(v) => v,
                        Err(code) => return Ok(code),
                    };
                    envelope = envelope.input("mode", "custom").input("theta", theta);
                    if let Some(b) = prefactor {
                        envelope = envelope.input("B", b);
                    }
                    CriticalLineBound::custom(theta, prefactor)?
                }
                BoundMode::Rosser => unreachable!(),
            };
            if cert.is_coefficient_only() {
                // Slope is still well-defined; the constant term needs a
                // prefactor.
                let params = BoundParams::new(eta, t0, cert)?;
                (None, Some(backlund_slope(params.eta, cert.theta())?))
            } else {
                let params = BoundParams::new(eta, t0, cert)?;
                (Some(backlund_bound(&params)?), None)
            }
        }
    };

    let (results, text) = match (bound, slope_only) {
        (Some(bound), _) => {
            let total = bound.value_at(t0)?;
            (
                json!({
                    "a": bound.a,
                    "b": bound.b,
                    "total_at_t0": total,
                    "method": bound.method,
                }),
                format!(
                    "bound at t0 = {}\n  a = {}\n  b = {}\n  a + b log t0 = {}\n",
                    sig6(t0),
                    sig6(bound.a),
                    sig6(bound.b),
                    sig6(total)
                ),
            )
        }
        (None, Some(slope)) => (
            json!({
                "b": slope,
                "note": "coefficient-only certificate: no prefactor, so no constant term",
            }),
            format!(
                "bound at t0 = {} (coefficient-only certificate)\n  b = {}\n",
                sig6(t0),
                sig6(slope)
            ),
        ),
        (None, None) => unreachable!(),
    };
    envelope = envelope.results(results.clone());
    let csv = kv_csv(&results);
    emit(cli, &envelope, &text, &csv)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_optimize(cli: &Cli, t0: f64, mode: SearchMode) -> Result<ExitCode, Error> {
    let (opt_mode, mode_name) = match mode {
        SearchMode::Convexity => (OptimizeMode::Convexity, "convexity"),
        SearchMode::ChengGraham => (OptimizeMode::ChengGraham, "cheng-graham"),
    };
    let result = minimize_bound(t0, opt_mode)?;
    let reference = refvals::ref_row(t0).map(|row| match opt_mode {
        OptimizeMode::Convexity => (row.conv_b, row.conv_total),
        OptimizeMode::ChengGraham => (row.subconv_b, row.subconv_total),
    });
    let mut results = json!({
        "t0": result.t0,
        "mode": mode_name,
        "best_eta": result.best_eta,
        "best_delta": result.best_delta,
        "a": result.bound.a,
        "b": result.bound.b,
        "total_at_t0": result.total_at_t0,
        "evaluations": result.evaluations,
    });
    let mut text = format!(
        "optimize {mode_name} at t0 = {}\n  best eta = {}\n",
        sig6(t0),
        sig6(result.best_eta)
    );
    if let Some(delta) = result.best_delta {
        text.push_str(&format!("  best delta = {}\n", sig6(delta)));
    }
    text.push_str(&format!(
        "  a = {}\n  b = {}\n  total = {}\n  evaluations = {}\n",
        sig6(result.bound.a),
        sig6(result.bound.b),
        sig6(result.total_at_t0),
        result.evaluations
    ));
    if let Some((ref_b, ref_total)) = reference {
        results["reference"] = json!({
            "b": ref_b,
            "total": ref_total,
            "b_delta": result.bound.b - ref_b,
            "total_delta": result.total_at_t0 - ref_total,
        });
        text.push_str(&format!(
            "  reference b = {} (delta {})\n  reference total = {} (delta {})\n",
            sig6(ref_b),
            sig6(result.bound.b - ref_b),
            sig6(ref_total),
            sig6(result.total_at_t0 - ref_total)
        ));
    }
    let envelope = ReportEnvelope::new("optimize")
        .input("t0", t0)
        .input("mode", mode_name)
        .results(results.clone())
        .reference(match opt_mode {
            OptimizeMode::Convexity => refvals::CITE_CONVEXITY,
            OptimizeMode::ChengGraham => refvals::CITE_CHENG_GRAHAM,
        })
        .reference(refvals::CITE_REF_TABLE);
    let csv = kv_csv(&results);
    emit(cli, &envelope, &text, &csv)?;
    Ok(ExitCode::SUCCESS)
}

const TABLE_COLUMNS: [&str; 7] = [
    "t0",
    "rosser_b",
    "rosser_total",
    "conv_b",
    "conv_total",
    "subconv_b",
    "subconv_total",
];

fn cmd_table(cli: &Cli, t0_list: Option<Vec<f64>>) -> Result<ExitCode, Error> {
    let heights = t0_list.unwrap_or_else(default_heights);
    let rows = build_table(&heights)?;

    let results = json!({
        "rows": rows.iter().map(table_row_json).collect::<Vec<_>>(),
    });
    let envelope = ReportEnvelope::new("table")
        .input("t0_list", heights.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(","))
        .results(results)
        .reference(refvals::CITE_ROSSER)
        .reference(refvals::CITE_CONVEXITY)
        .reference(refvals::CITE_CHENG_GRAHAM)
        .reference(refvals::CITE_REF_TABLE);

    let mut csv = String::new();
    csv.push_str(&TABLE_COLUMNS.join(","));
    for col in &TABLE_COLUMNS[1..] {
        csv.push_str(&format!(",{col}_ref"));
    }
    for col in &TABLE_COLUMNS[1..] {
        csv.push_str(&format!(",{col}_delta"));
    }
    csv.push('\n');
    for row in &rows {
        let computed = [
            row.t0,
            row.rosser_b,
            row.rosser_total,
            row.conv_b,
            row.conv_total,
            row.subconv_b,
            row.subconv_total,
        ];
        csv.push_str(
            &computed
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
        match (row.reference, row.deltas()) {
            (Some(r), Some(d)) => {
                for v in [r.rosser_b, r.rosser_total, r.conv_b, r.conv_total, r.subconv_b, r.subconv_total] {
                    csv.push_str(&format!(",{v}"));
                }
                for v in d {
                    csv.push_str(&format!(",{v}"));
                }
            }
            _ => csv.push_str(&",".repeat(12)),
        }
        csv.push('\n');
    }

    let mut text = String::from(
        "t0        rosser_b  rosser_S  conv_b    conv_S    subconv_b subconv_S\n",
    );
    for row in &rows {
        text.push_str(&format!(
            "{:<9} {:<9} {:<9} {:<9} {:<9} {:<9} {}\n",
            format!("{:e}", row.t0),
            sig6(row.rosser_b),
            sig6(row.rosser_total),
            sig6(row.conv_b),
            sig6(row.conv_total),
            sig6(row.subconv_b),
            sig6(row.subconv_total),
        ));
        if let (Some(r), Some(d)) = (row.reference, row.deltas()) {
            text.push_str(&format!(
                "  ref     {:<9} {:<9} {:<9} {:<9} {:<9} {}\n",
                sig6(r.rosser_b),
                sig6(r.rosser_total),
                sig6(r.conv_b),
                sig6(r.conv_total),
                sig6(r.subconv_b),
                sig6(r.subconv_total),
            ));
            text.push_str(&format!(
                "  delta   {:<9} {:<9} {:<9} {:<9} {:<9} {}\n",
                sig6(d[0]),
                sig6(d[1]),
                sig6(d[2]),
                sig6(d[3]),
                sig6(d[4]),
                sig6(d[5]),
            ));
        }
    }

    emit(cli, &envelope, &text, &csv)?;
    Ok(ExitCode::SUCCESS)
}

fn table_row_json(row: &TableRow) -> serde_json::Value {
    let mut value = json!({
        "t0": row.t0,
        "rosser_b": row.rosser_b,
        "rosser_total": row.rosser_total,
        "conv_b": row.conv_b,
        "conv_total": row.conv_total,
        "subconv_b": row.subconv_b,
        "subconv_total": row.subconv_total,
        "conv_eta": row.conv_eta,
        "subconv_eta": row.subconv_eta,
        "subconv_delta": row.subconv_delta,
    });
    if let (Some(r), Some(d)) = (row.reference, row.deltas()) {
        value["reference"] = json!({
            "rosser_b": r.rosser_b,
            "rosser_total": r.rosser_total,
            "conv_b": r.conv_b,
            "conv_total": r.conv_total,
            "subconv_b": r.subconv_b,
            "subconv_total": r.subconv_total,
        });
        value["delta"] = json!({
            "rosser_b": d[0],
            "rosser_total": d[1],
            "conv_b": d[2],
            "conv_total": d[3],
            "subconv_b": d[4],
            "subconv_total": d[5],
        });
    }
    value
}

fn cmd_crossover(cli: &Cli, lo: f64, hi: f64) -> Result<ExitCode, Error> {
    let t_star = crossover_height(lo, hi)?;
    let results = json!({
        "lo": lo,
        "hi": hi,
        "crossover_t0": t_star,
        "crossover_log10": t_star.log10(),
        "reference_claim_log10": refvals::REF_CROSSOVER_LOG10,
    });
    let text = format!(
        "subconvexity slope overtakes convexity at t0 = {} (log10 = {})\n\
         reference claim: past 10^{}\n",
        sig6(t_star),
        sig6(t_star.log10()),
        refvals::REF_CROSSOVER_LOG10,
    );
    let envelope = ReportEnvelope::new("crossover")
        .input("lo", lo)
        .input("hi", hi)
        .results(results.clone())
        .reference(refvals::CITE_REF_TABLE);
    let csv = kv_csv(&results);
    emit(cli, &envelope, &text, &csv)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_s(cli: &Cli, t_max: f64, samples: usize) -> Result<ExitCode, Error> {
    if !(t_max > 4.0 && t_max <= MAX_SCAN_HEIGHT) {
        return Ok(flag_error(&format!(
            "--t-max must lie in (4, {MAX_SCAN_HEIGHT}], got {t_max}"
        )));
    }
    if samples == 0 {
        return Ok(flag_error("--samples must be positive"));
    }
    let scan = scan_zeros(t_max)?;
    let rosser = rosser_bound(3.0)?;
    let backlund = backlund_bound(&BoundParams::new(
        0.351,
        3.001,
        CriticalLineBound::convexity(),
    )?)?;
    let report = check_bounds_empirically(&scan, 4.0, t_max, &[rosser, backlund], samples)?;
    let ok = report.violations.is_empty();
    let results = json!({
        "t_max": t_max,
        "zero_count": scan.zero_count,
        "suspicious_gaps": scan.suspicious_gaps,
        "samples": report.samples,
        "max_abs_s": report.max_abs_s,
        "argmax_t": report.argmax_t,
        "violations": report.violations,
        "bounds": [rosser, backlund],
    });
    let text = format!(
        "scan to t_max = {}: {} zeros, {} suspicious gaps\n\
         |S| over [4, {}] at {} samples: max {} at t = {}\n\
         violations: {}\n",
        sig6(t_max),
        scan.zero_count,
        scan.suspicious_gaps.len(),
        sig6(t_max),
        report.samples,
        sig6(report.max_abs_s),
        sig6(report.argmax_t),
        report.violations.len(),
    );
    let envelope = ReportEnvelope::new("verify-s")
        .input("t_max", t_max)
        .input("samples", samples)
        .results(results.clone())
        .reference(refvals::CITE_ROSSER)
        .reference(refvals::CITE_CONVEXITY);
    let csv = kv_csv(&results);
    emit(cli, &envelope, &text, &csv)?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(5) })
}

fn cmd_verify_lemmas(cli: &Cli, samples: usize, seed: u64) -> Result<ExitCode, Error> {
    if samples == 0 {
        return Ok(flag_error("--samples must be positive"));
    }
    let report = check_lemmas(samples, seed)?;
    let results = serde_json::to_value(&report).expect("report serializes");
    let mut text = format!("lemma domination checks, {samples} samples, seed {seed}\n");
    for family in &report.families {
        text.push_str(&format!(
            "  {:<18} worst margin {} at s = {} -> {}\n",
            family.name,
            sig6(family.worst_margin),
            family.worst_at,
            if family.pass { "pass" } else { "FAIL" },
        ));
    }
    let envelope = ReportEnvelope::new("verify-lemmas")
        .input("samples", samples)
        .input("seed", seed)
        .results(results.clone())
        .reference(refvals::CITE_RADEMACHER)
        .reference(refvals::CITE_CHENG_GRAHAM);
    let csv = kv_csv(&results);
    emit(cli, &envelope, &text, &csv)?;
    Ok(if report.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(5)
    })
}

/// Flatten a JSON object into key,value CSV lines (scalars only; nested
/// values are serialized inline).
fn kv_csv(value: &serde_json::Value) -> String {
    let mut csv = String::from("key,value\n");
    if let serde_json::Value::Object(map) = value {
        for (key, val) in map {
            let rendered = match val {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            csv.push_str(&format!("{key},{}\n", rendered.replace(',', ";")));
        }
    }
    csv
}

fn emit(cli: &Cli, envelope: &ReportEnvelope, text: &str, csv: &str) -> Result<(), Error> {
    let rendered = match cli.format {
        Format::Text => text.to_string(),
        Format::Json => format!("{}\n", envelope.to_json()),
        Format::Csv => csv.to_string(),
    };
    print!("{rendered}");
    if let Some(path) = &cli.out {
        std::fs::write(path, &rendered)
            .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}
