//! `antitrid` command-line front end.
//!
//! Exit codes: 0 on success, 1 on a numerical verification failure or a
//! singular input, 2 on usage or parse errors. Documents go to stdout,
//! diagnostics to stderr.

pub mod args;
pub mod literal;
pub mod output;
pub mod verify;

use std::io::Write;
use std::time::Instant;

use antitrid_core::numbers::{
    det_a_report, det_b_report, fib_poly_report, fib_product, laplace_report, pell_product,
    ExactValue, FactorizationReport, Sequence,
};
use antitrid_core::oracle::{lu_det, mat_power, mat_power_signed};
use antitrid_core::spectral::{SpectralData, DEFAULT_ORACLE_TOL};
use antitrid_core::{closed_power, AntiTridiagSpec, ComplexScalar, Error};
use clap::Parser;

use args::{BenchArgs, Cli, Command, DetArgs, EigsArgs, FactorArgs, IdentityArg, MatrixArgs, PowerArgs, VerifyArgs};
use output::{
    pair, BenchRow, BenchTable, EigenPayload, EigenRow, MatrixPayload, NamedScalar, OutputDocument,
    ReportRow, ReportTable, ScalarPayload, Verification,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const BENCH_MAX_N: usize = 1000;
pub const BENCH_MAX_R: u64 = 1_000_000_000;
pub const BENCH_ORACLE_MAX_R: u64 = 1_000_000;

/// A failed command: the exit code and the message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn numeric(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_FAILURE,
            message: message.into(),
        }
    }
}

/// Parameter errors are usage errors; everything else the numerics raise is exit 1.
impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ZeroOffDiagonal
            | Error::InvalidDimension { .. }
            | Error::NonFiniteParameter(_)
            | Error::Domain(_)
            | Error::OverflowExactInteger { .. } => Failure::usage(e.to_string()),
            _ => Failure::numeric(e.to_string()),
        }
    }
}

/// Result of a command: the document to print and the exit code to return.
pub struct Outcome {
    pub document: OutputDocument,
    pub code: i32,
}

fn ok(document: OutputDocument) -> Result<Outcome, Failure> {
    Ok(Outcome {
        document,
        code: EXIT_OK,
    })
}

fn build_spec(m: &MatrixArgs) -> Result<AntiTridiagSpec, Failure> {
    Ok(AntiTridiagSpec::new(m.family.into(), m.n, m.a, m.b)?)
}

fn check_tol(tol: Option<f64>) -> Result<Option<f64>, Failure> {
    match tol {
        Some(t) if !(t.is_finite() && t >= 0.0) => Err(Failure::usage(format!(
            "tolerance must be a finite non-negative number, got {t}"
        ))),
        other => Ok(other),
    }
}

pub fn cmd_power(args: &PowerArgs) -> Result<Outcome, Failure> {
    let spec = build_spec(&args.matrix)?;
    let tol = check_tol(args.tol)?;
    let closed = closed_power(&spec, args.r)?;
    let mut payload = MatrixPayload::from_matrix(&closed);
    let mut code = EXIT_OK;
    if args.verify {
        let tolerance = tol.unwrap_or(if args.r < 0 { 10.0 * DEFAULT_ORACLE_TOL } else { DEFAULT_ORACLE_TOL });
        let oracle = mat_power_signed(&spec.build_anti(), args.r)?;
        let deviation = closed.rel_deviation(&oracle)?;
        let passed = deviation <= tolerance;
        if !passed {
            code = EXIT_FAILURE;
        }
        payload.verification = Some(Verification {
            max_rel_deviation: deviation,
            tolerance,
            passed,
        });
    }
    Ok(Outcome {
        document: OutputDocument::Matrix(payload),
        code,
    })
}

pub fn cmd_eigs(args: &EigsArgs) -> Result<Outcome, Failure> {
    let spec = build_spec(&args.matrix)?;
    let sd = SpectralData::new(&spec);
    let anti = spec.build_anti();
    let values = sd
        .eigenvalues_anti()
        .into_iter()
        .zip(sd.angles())
        .enumerate()
        .map(|(idx, (mu, &theta))| EigenRow {
            k: idx + 1,
            theta,
            value: pair(mu),
            residual: args.residuals.then(|| lu_det(&anti.shift_diagonal(mu)).norm()),
        })
        .collect();
    ok(OutputDocument::Eigenvalues(EigenPayload {
        family: spec.family().to_string(),
        n: spec.n(),
        values,
    }))
}

pub fn cmd_det(args: &DetArgs) -> Result<Outcome, Failure> {
    let spec = build_spec(&args.matrix)?;
    let sd = SpectralData::new(&spec);
    let (matrix, eigenvalues) = if args.tilde {
        (spec.build_tilde(), sd.eigenvalues().to_vec())
    } else {
        (spec.build_anti(), sd.eigenvalues_anti())
    };
    let product = eigenvalues.iter().fold(ComplexScalar::new(1.0, 0.0), |acc, z| acc * z);
    ok(OutputDocument::Scalar(ScalarPayload {
        values: vec![
            NamedScalar {
                name: "lu_det".into(),
                value: pair(lu_det(&matrix)),
            },
            NamedScalar {
                name: "eigenvalue_product".into(),
                value: pair(product),
            },
        ],
    }))
}

fn report_row(report: &FactorizationReport) -> ReportRow {
    ReportRow {
        identity: report.identity.name().to_string(),
        n: report.n,
        x: report.x.map(pair),
        exact_integer: match report.exact_value {
            ExactValue::Integer(v) => Some(v),
            ExactValue::Complex(_) => None,
        },
        exact: pair(report.exact_value.as_complex()),
        product: pair(report.product_value),
        abs_residual: report.abs_residual,
        rel_residual: report.rel_residual,
        tolerance: report.tolerance,
        passed: report.passed,
    }
}

pub fn factor_reports(args: &FactorArgs) -> Result<Vec<FactorizationReport>, Failure> {
    let tol = check_tol(args.tol)?;
    let (lo, hi) = args.n;
    let mut reports = Vec::new();
    for n in lo..=hi {
        let batch: Vec<FactorizationReport> = match args.identity {
            IdentityArg::Fib => vec![fib_product(n)?],
            IdentityArg::Pell => vec![pell_product(n)?],
            IdentityArg::DetBFib => vec![det_b_report(n, Sequence::Fib)?],
            IdentityArg::DetBPell => vec![det_b_report(n, Sequence::Pell)?],
            IdentityArg::FibPoly => args
                .x
                .iter()
                .map(|&x| fib_poly_report(n, x))
                .collect::<Result<_, _>>()?,
            IdentityArg::DetA => args
                .x
                .iter()
                .map(|&x| det_a_report(n, x))
                .collect::<Result<_, _>>()?,
            IdentityArg::LaplaceB => args
                .x
                .iter()
                .map(|&a| laplace_report(n, a, ComplexScalar::new(0.0, 1.0)))
                .collect::<Result<_, _>>()?,
        };
        reports.extend(batch.into_iter().map(|r| match tol {
            Some(t) => r.with_tolerance(t),
            None => r,
        }));
    }
    Ok(reports)
}

pub fn cmd_factor(args: &FactorArgs) -> Result<Outcome, Failure> {
    let reports = factor_reports(args)?;
    let all_passed = reports.iter().all(|r| r.passed);
    Ok(Outcome {
        document: OutputDocument::ReportTable(ReportTable {
            rows: reports.iter().map(report_row).collect(),
            all_passed,
        }),
        code: if all_passed { EXIT_OK } else { EXIT_FAILURE },
    })
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, Failure> {
    let tol = check_tol(args.tol)?;
    let trials = usize::try_from(args.trials).map_err(|_| Failure::usage("too many trials"))?;
    let report = verify::run_sweep(args.seed, trials, tol);
    let code = if report.passed { EXIT_OK } else { EXIT_FAILURE };
    Ok(Outcome {
        document: OutputDocument::VerifyReport(report),
        code,
    })
}

fn millis_since(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Times both legs for every `(n, r)` pair. The oracle leg is skipped above
/// [`BENCH_ORACLE_MAX_R`]. Overflow in either leg does not abort the run;
/// only timings are reported.
pub fn bench_rows(args: &BenchArgs) -> Result<Vec<BenchRow>, Failure> {
    if let Some(&n) = args.n.iter().find(|&&n| n > BENCH_MAX_N) {
        return Err(Failure::usage(format!("bench n = {n} exceeds {BENCH_MAX_N}")));
    }
    if let Some(&r) = args.r.iter().find(|&&r| r > BENCH_MAX_R) {
        return Err(Failure::usage(format!("bench r = {r} exceeds {BENCH_MAX_R}")));
    }
    let mut rows = Vec::new();
    for &n in &args.n {
        let spec = AntiTridiagSpec::new(args.family.into(), n, args.a, args.b)?;
        let anti = spec.build_anti();
        for &r in &args.r {
            let start = Instant::now();
            let _ = closed_power(&spec, r as i64);
            rows.push(BenchRow {
                n,
                r,
                method: "closed_form".into(),
                millis: millis_since(start),
            });
            if r <= BENCH_ORACLE_MAX_R {
                let start = Instant::now();
                let _ = mat_power(&anti, r);
                rows.push(BenchRow {
                    n,
                    r,
                    method: "oracle".into(),
                    millis: millis_since(start),
                });
            }
        }
    }
    Ok(rows)
}

pub fn cmd_bench(args: &BenchArgs) -> Result<Outcome, Failure> {
    ok(OutputDocument::BenchTable(BenchTable {
        rows: bench_rows(args)?,
    }))
}

fn dispatch(cli: &Cli) -> (Result<Outcome, Failure>, output::Format) {
    match &cli.command {
        Command::Power(a) => (cmd_power(a), a.format.format),
        Command::Eigs(a) => (cmd_eigs(a), a.format.format),
        Command::Det(a) => (cmd_det(a), a.format.format),
        Command::Factor(a) => (cmd_factor(a), a.format.format),
        Command::Verify(a) => (cmd_verify(a), a.format.format),
        Command::Bench(a) => (cmd_bench(a), a.format.format),
    }
}

/// Parses `argv` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let (result, format) = dispatch(&cli);
    match result {
        Ok(outcome) => {
            let _ = out.write_all(outcome.document.render(format).as_bytes());
            if outcome.code != EXIT_OK {
                let _ = writeln!(err, "antitrid: verification failed");
            }
            outcome.code
        }
        Err(failure) => {
            let _ = writeln!(err, "antitrid: {}", failure.message);
            failure.code
        }
    }
}
