//! `mathcheck`: command-line entry point for the verification suites.
//!
//! Exit codes: 0 when every check passes or is a whitelisted
//! refuted-as-printed finding, 1 when any check fails, 2 on usage errors.

use clap::{Args, Parser, Subcommand};
use mathcheck_core::braid::{braid_check, SquareMapTable};
use mathcheck_core::jordan::{self, CurveKind, CurveSpec, Point2};
use mathcheck_core::matrix_series::{self, Mat2};
use mathcheck_core::report::{CheckStatus, SuiteCheck, SuiteReport};
use mathcheck_core::suites::{self, REFUTED_WHITELIST};
use mathcheck_core::weak_bring::{self, BRingCandidate};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

const EXIT_CHECK_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "mathcheck", version, about = "Verification suites for a family of algebraic and geometric identities", disable_help_subcommand = true)]
struct Cli {
    /// Emit a single JSON document instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Boolean-algebra suites: triple trigonometry, weak ring axioms, and
    /// base-parameterized exponentials.
    Boolean(BooleanArgs),
    /// Braid-condition suite over square map tables.
    Braid(BraidArgs),
    /// 2x2 power-sum identity suite.
    Matrix(MatrixArgs),
    /// Jordan-curve metric suite.
    Curve(CurveArgs),
    /// Projective incidence suite with exact rational arithmetic.
    Incidence(IncidenceArgs),
    /// Every suite at default scales.
    All,
}

#[derive(Args)]
struct BooleanArgs {
    /// Largest atom count to check (unary identities run for 1..=atoms).
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=16))]
    atoms: u8,
    /// Restrict base-parameterized checks to one exponential base, given as
    /// an atom mask (must be nonzero and fit the atom count).
    #[arg(long)]
    base_e: Option<u32>,
    /// Check a user-supplied weak-ring operation table instead of the
    /// built-in construction (see the plain-text format in the docs).
    #[arg(long)]
    ring_table: Option<PathBuf>,
}

#[derive(Args)]
struct BraidArgs {
    /// Largest atom count for the built-in solution families.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
    atoms: u8,
    /// Also enumerate all candidate maps on the two-element carrier.
    #[arg(long)]
    enumerate: bool,
    /// Check a user-supplied map table ("i j -> p q" lines) instead of the
    /// built-in families.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Args)]
struct MatrixArgs {
    /// File with one matrix per line: four numbers, row-major.
    #[arg(long, conflicts_with_all = ["random", "seed"])]
    input: Option<PathBuf>,
    /// Number of pseudorandom determinant-1 matrices to generate.
    #[arg(long, default_value_t = 1000)]
    random: usize,
    /// RNG seed for --random.
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args)]
struct CurveArgs {
    /// circle | ellipse | reuleaux | polyline-file
    #[arg(long)]
    shape: String,
    /// Circle radius.
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    /// Ellipse semi-axis along x.
    #[arg(long, default_value_t = 2.0)]
    a: f64,
    /// Ellipse semi-axis along y.
    #[arg(long, default_value_t = 1.0)]
    b: f64,
    /// Constant width of the Reuleaux triangle.
    #[arg(long, default_value_t = 1.0)]
    width: f64,
    /// Vertex file for --shape polyline-file: one "x y" pair per line.
    #[arg(long)]
    polyline: Option<PathBuf>,
    /// Number of boundary samples.
    #[arg(long, default_value_t = 4096)]
    samples: usize,
    /// Write plot data (central-chord profile and boundary points) as CSV.
    #[arg(long)]
    emit_plot_data: Option<PathBuf>,
}

#[derive(Args)]
struct IncidenceArgs {
    /// Number of seeded configurations to build and check.
    #[arg(long, default_value_t = 100)]
    trials: u64,
    /// First seed; trials use seed, seed+1, ...
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Where to write the exact-rational counterexample certificate if a
    /// check fails.
    #[arg(long, default_value = "incidence_counterexample.txt")]
    certificate: PathBuf,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn print_human(report: &SuiteReport) {
    println!("suite {} (version {})", report.suite, report.version);
    if let Some(seed) = report.seed {
        println!("  seed: {seed}");
    }
    for c in &report.checks {
        let tag = match c.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::RefutedAsPrinted => "REFUTED-AS-PRINTED",
        };
        println!("  [{tag}] {} ({:.1?})", c.name, c.duration);
        if let Some(w) = &c.counterexample {
            for line in w.lines() {
                println!("      {line}");
            }
        }
    }
}

fn finish(reports: Vec<SuiteReport>, json: bool) -> ExitCode {
    finish_with(reports, json, None::<()>)
}

/// Prints the reports (plus an optional extra JSON section) and maps the
/// overall outcome to the exit code.
fn finish_with<T: Serialize>(reports: Vec<SuiteReport>, json: bool, extra: Option<T>) -> ExitCode {
    let ok = reports.iter().all(|r| r.acceptable(REFUTED_WHITELIST));
    if json {
        #[derive(Serialize)]
        struct Document<T> {
            reports: Vec<SuiteReport>,
            #[serde(skip_serializing_if = "Option::is_none")]
            details: Option<T>,
        }
        let doc = Document { reports, details: extra };
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        for r in &reports {
            print_human(r);
        }
        println!("overall: {}", if ok { "ok" } else { "FAILED" });
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILURE)
    }
}

fn run_boolean(args: &BooleanArgs, json: bool) -> ExitCode {
    if let Some(mask) = args.base_e {
        if mask == 0 || mask >= (1u32 << args.atoms) {
            return usage_error(&format!(
                "--base-e {mask} must be a nonzero mask below 2^{}",
                args.atoms
            ));
        }
    }
    if let Some(path) = &args.ring_table {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return usage_error(&format!("cannot read {}: {e}", path.display())),
        };
        let cand = match BRingCandidate::parse(&text) {
            Ok(c) => c,
            Err(e) => return usage_error(&format!("invalid ring table: {e}")),
        };
        let mut report = SuiteReport::new("boolean");
        let start = std::time::Instant::now();
        let check = match weak_bring::check_axioms(&cand) {
            Ok(ax) if ax.all_pass() => SuiteCheck {
                name: "user_ring_axioms".into(),
                claim: "bring-axioms".into(),
                status: CheckStatus::Pass,
                counterexample: None,
                duration: start.elapsed(),
            },
            Ok(ax) => {
                let f = ax.first_failure().expect("failure present");
                SuiteCheck {
                    name: "user_ring_axioms".into(),
                    claim: "bring-axioms".into(),
                    status: CheckStatus::Fail,
                    counterexample: Some(format!(
                        "axiom ({}) {}: {}",
                        f.number,
                        f.description,
                        f.witness.clone().unwrap_or_default()
                    )),
                    duration: start.elapsed(),
                }
            }
            Err(e) => return usage_error(&format!("invalid ring table: {e}")),
        };
        report.push(check);
        return finish(vec![report], json);
    }
    finish(vec![suites::boolean_suite(args.atoms, args.base_e)], json)
}

fn run_braid(args: &BraidArgs, json: bool) -> ExitCode {
    if let Some(path) = &args.table {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return usage_error(&format!("cannot read {}: {e}", path.display())),
        };
        let table = match SquareMapTable::parse(&text) {
            Ok(t) => t,
            Err(e) => return usage_error(&format!("invalid map table: {e}")),
        };
        let start = std::time::Instant::now();
        let verdict = braid_check(&table);
        let mut report = SuiteReport::new("braid");
        report.push(SuiteCheck {
            name: "user_table_braid".into(),
            claim: "braid-condition".into(),
            status: if verdict.holds {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            counterexample: verdict.witness.map(|w| {
                format!("input={:?} lhs={:?} rhs={:?}", w.input, w.lhs, w.rhs)
            }),
            duration: start.elapsed(),
        });
        return finish(vec![report], json);
    }
    finish(vec![suites::braid_suite(args.atoms, args.enumerate)], json)
}

fn parse_matrix_file(text: &str) -> Result<Vec<Mat2<f64>>, String> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Result<Vec<f64>, _> =
            line.split_whitespace().map(str::parse::<f64>).collect();
        match nums {
            Ok(v) if v.len() == 4 => out.push(Mat2::new(v[0], v[1], v[2], v[3])),
            Ok(v) => {
                return Err(format!(
                    "line {}: expected 4 numbers, found {}",
                    lineno + 1,
                    v.len()
                ))
            }
            Err(e) => return Err(format!("line {}: {e}", lineno + 1)),
        }
    }
    if out.is_empty() {
        return Err("no matrices found".into());
    }
    Ok(out)
}

fn run_matrix(args: &MatrixArgs, json: bool) -> ExitCode {
    if let Some(path) = &args.input {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return usage_error(&format!("cannot read {}: {e}", path.display())),
        };
        let matrices = match parse_matrix_file(&text) {
            Ok(m) => m,
            Err(e) => return usage_error(&format!("invalid matrix file: {e}")),
        };
        // one check (and one JSON detail) per input matrix
        let mut report = SuiteReport::new("matrix");
        let mut details = Vec::new();
        for (i, m) in matrices.iter().enumerate() {
            let start = std::time::Instant::now();
            let (status, witness) = match matrix_series::verify_identity(m, 1e-6) {
                Ok(r) => {
                    let status = if r.pass {
                        CheckStatus::Pass
                    } else {
                        CheckStatus::Fail
                    };
                    let witness = (!r.pass).then(|| {
                        format!("max_rel_error={} max_abs_error={}", r.max_rel_error, r.max_abs_error)
                    });
                    details.push(r);
                    (status, witness)
                }
                Err(e) => (CheckStatus::Fail, Some(e.to_string())),
            };
            report.push(SuiteCheck {
                name: format!("matrix_{:04}", i + 1),
                claim: "matrix-power-sum".into(),
                status,
                counterexample: witness,
                duration: start.elapsed(),
            });
        }
        return finish_with(vec![report], json, Some(details));
    }
    let batch = matrix_series::random_sl2(args.seed, args.random);
    finish(
        vec![suites::matrix_suite(&batch, 1e-6, Some(args.seed))],
        json,
    )
}

fn parse_polyline_file(text: &str) -> Result<Vec<Point2>, String> {
    let mut pts = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Result<Vec<f64>, _> =
            line.split_whitespace().map(str::parse::<f64>).collect();
        match nums {
            Ok(v) if v.len() == 2 => pts.push(Point2::new(v[0], v[1])),
            _ => return Err(format!("line {}: expected \"x y\"", lineno + 1)),
        }
    }
    Ok(pts)
}

#[derive(Serialize)]
struct CurveDetails {
    metrics: jordan::CurveMetrics,
    conjectures: jordan::ConjectureReport,
}

fn emit_plot_data(path: &PathBuf, polyline: &[Point2]) -> Result<(), String> {
    let (centroid, _) =
        jordan::region_centroid_area(polyline).map_err(|e| e.to_string())?;
    let profile =
        jordan::chord_profile(polyline, &centroid, 1024).map_err(|e| e.to_string())?;
    let mut out = String::from("theta,chord\n");
    for (theta, chord) in profile {
        out.push_str(&format!("{theta},{chord}\n"));
    }
    out.push_str("t,x,y\n");
    let n = polyline.len();
    for (i, p) in polyline.iter().enumerate() {
        out.push_str(&format!("{},{},{}\n", i as f64 / n as f64, p.x, p.y));
    }
    std::fs::write(path, out).map_err(|e| e.to_string())
}

fn run_curve(args: &CurveArgs, json: bool) -> ExitCode {
    let kind = match args.shape.as_str() {
        "circle" => CurveKind::Circle { radius: args.radius },
        "ellipse" => CurveKind::Ellipse { a: args.a, b: args.b },
        "reuleaux" => CurveKind::Reuleaux { width: args.width },
        "polyline-file" => {
            let path = match &args.polyline {
                Some(p) => p,
                None => return usage_error("--shape polyline-file requires --polyline <file>"),
            };
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return usage_error(&format!("cannot read {}: {e}", path.display())),
            };
            match parse_polyline_file(&text) {
                Ok(pts) => CurveKind::Polyline(pts),
                Err(e) => return usage_error(&format!("invalid polyline file: {e}")),
            }
        }
        other => return usage_error(&format!("unknown shape {other:?}")),
    };
    let samples = if matches!(kind, CurveKind::Polyline(_)) {
        // the vertex list is used as-is; the sample count only has to clear
        // the validity floor
        args.samples.max(64)
    } else {
        args.samples
    };
    let spec = match CurveSpec::new(kind, samples) {
        Ok(s) => s,
        Err(e) => return usage_error(&e.to_string()),
    };

    if let Some(path) = &args.emit_plot_data {
        let polyline = jordan::sample(&spec);
        if let Err(e) = emit_plot_data(path, &polyline) {
            return usage_error(&format!("cannot emit plot data: {e}"));
        }
    }

    let start = std::time::Instant::now();
    let mut report = SuiteReport::new("curve");
    let details = match jordan::analyze(&spec) {
        Ok((metrics, conjectures)) => {
            push_curve_checks(&mut report, &metrics, &conjectures, start.elapsed());
            Some(CurveDetails { metrics, conjectures })
        }
        Err(e) => {
            report.push(SuiteCheck {
                name: "curve_analysis".into(),
                claim: "curve-metrics".into(),
                status: CheckStatus::Fail,
                counterexample: Some(e.to_string()),
                duration: start.elapsed(),
            });
            None
        }
    };
    report.canonicalize();
    finish_with(vec![report], json, details)
}

/// Inequality probes for one analyzed curve. A constant-width non-circle
/// that attains L/D = pi is reported as the whitelisted equality finding
/// rather than a failure.
fn push_curve_checks(
    report: &mut SuiteReport,
    metrics: &jordan::CurveMetrics,
    conjectures: &jordan::ConjectureReport,
    duration: Duration,
) {
    use std::f64::consts::PI;
    let ratio = conjectures.ratio_l_over_diameter;
    let equality_non_circle = (ratio - PI).abs() <= 1e-4
        && metrics.min_central_chord < metrics.max_diameter - 1e-3;
    if equality_non_circle {
        report.push(SuiteCheck {
            name: "reuleaux_equality_probe".into(),
            claim: "curve-equality-probe".into(),
            status: CheckStatus::RefutedAsPrinted,
            counterexample: Some(format!(
                "constant-width non-circle with L/D = {ratio} (d = {}, D = {})",
                metrics.min_central_chord, metrics.max_diameter
            )),
            duration,
        });
    } else {
        let ok = conjectures.ineq_i_left_margin >= -1e-6;
        report.push(SuiteCheck {
            name: "curve_ratio_upper".into(),
            claim: "curve-ratio-upper".into(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            counterexample: (!ok).then(|| {
                format!("L/D = {ratio} exceeds pi (margin {})", conjectures.ineq_i_left_margin)
            }),
            duration,
        });
    }
    let ok = conjectures.ineq_i_right_margin >= -1e-6;
    report.push(SuiteCheck {
        name: "curve_ratio_lower".into(),
        claim: "curve-ratio-lower".into(),
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        counterexample: (!ok).then(|| {
            format!(
                "L/d = {} is below pi (margin {})",
                conjectures.ratio_l_over_chord, conjectures.ineq_i_right_margin
            )
        }),
        duration,
    });
    let ok = conjectures.ineq_iii_holds;
    report.push(SuiteCheck {
        name: "curve_area_bound".into(),
        claim: "curve-area-bound".into(),
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        counterexample: (!ok).then(|| {
            format!("dD - A = {} is not positive", conjectures.ineq_iii_margin)
        }),
        duration,
    });
}

fn run_incidence(args: &IncidenceArgs, json: bool) -> ExitCode {
    if args.trials == 0 {
        return usage_error("--trials must be at least 1");
    }
    let report = suites::incidence_suite(args.trials, args.seed);
    // write the exact-rational certificate alongside the failure report
    if !report.acceptable(REFUTED_WHITELIST) {
        let body: String = report
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .filter_map(|c| c.counterexample.as_ref())
            .cloned()
            .collect::<Vec<_>>()
            .join("\n\n");
        if let Err(e) = std::fs::write(&args.certificate, body) {
            eprintln!(
                "warning: cannot write certificate {}: {e}",
                args.certificate.display()
            );
        } else {
            eprintln!("counterexample certificate: {}", args.certificate.display());
        }
    }
    finish(vec![report], json)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Boolean(args) => run_boolean(args, cli.json),
        Command::Braid(args) => run_braid(args, cli.json),
        Command::Matrix(args) => run_matrix(args, cli.json),
        Command::Curve(args) => run_curve(args, cli.json),
        Command::Incidence(args) => run_incidence(args, cli.json),
        Command::All => finish(suites::all_suites(), cli.json),
    }
}
