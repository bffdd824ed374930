//! Command-line front end. Scene files in; verdicts, certificates, and
//! samples out. Exit codes: 0 verified pass, 1 verified violation or
//! negative result, 2 usage or parse error.

use clap::{Parser, Subcommand};
use f23::carnot::Point;
use f23::classify::{
    component_of, graph_solve, halfspace_from_quotient, witness_line, ClassifyError, Component,
};
use f23::haffine::{eval, is_characteristic};
use f23::monotone::{check_monotone_batch, Verdict};
use f23::rat::Rational;
use f23::scene::{CertificateFile, Scene};
use serde::Serialize;
use serde_json::json;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "f23",
    version,
    about = "Exact tools for the free step-2 rank-3 Carnot algebra"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the scene's h-affine function at a point
    Eval {
        #[arg(long)]
        scene: PathBuf,
        /// Point as inline JSON {"theta":[...],"omega":[...]}
        #[arg(long)]
        point: String,
        /// Emit a lossy decimal approximation instead of an exact rational
        #[arg(long)]
        floats: bool,
    },
    /// Run the batch monotonicity checker over the scene's sampler
    Check {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify points against the scene: components, characteristic
    /// flags, witness certificates, and the quotient half-space
    Classify {
        #[arg(long)]
        scene: PathBuf,
        /// JSON array of points
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample level-set points on a grid of the non-pivot coordinates
    Sample {
        #[arg(long)]
        scene: PathBuf,
        /// Coordinate solved for: 1, 2, or 3
        #[arg(long, default_value_t = 1)]
        axis: u8,
        /// Grid side length per coordinate
        #[arg(long, default_value_t = 5)]
        grid: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit lossy decimal approximations in the CSV
        #[arg(long)]
        floats: bool,
    },
    /// Re-verify a certificate file without recomputing it
    VerifyCert {
        #[arg(long)]
        cert: PathBuf,
    },
}

/// A fatal input problem: message to stderr, exit 2.
struct UsageError(String);

impl From<serde_json::Error> for UsageError {
    fn from(e: serde_json::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, UsageError> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| UsageError(format!("cannot parse {}: {e}", path.display())))
}

/// Write to the path if given, else stdout.
fn emit(out: Option<&Path>, content: &str) -> Result<(), UsageError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display()))),
        None => {
            if content.ends_with('\n') {
                print!("{content}");
            } else {
                println!("{content}");
            }
            Ok(())
        }
    }
}

fn error_code(e: &ClassifyError) -> &'static str {
    match e {
        ClassifyError::ZeroForm => "ZERO_FORM",
        ClassifyError::ConstantInput => "CONSTANT_INPUT",
        ClassifyError::NotOnLevelSet => "NOT_ON_LEVEL_SET",
        ClassifyError::InSigma => "IN_SIGMA",
        ClassifyError::DegenerateF1 => "DEGENERATE_F1",
        ClassifyError::DegenerateF2 => "DEGENERATE_F2",
        ClassifyError::DifferentComponents => "DIFFERENT_COMPONENTS",
        ClassifyError::OnLevelSet => "ON_LEVEL_SET",
        ClassifyError::ZeroPivot => "ZERO_PIVOT",
        ClassifyError::ZeroPivotAtPoint => "ZERO_PIVOT_AT_POINT",
        ClassifyError::NotFound => "NOT_FOUND",
        ClassifyError::DependentKernel => "DEPENDENT_KERNEL",
        ClassifyError::EmptyKernel => "EMPTY_KERNEL",
        ClassifyError::ConstantQuotientFunction => "CONSTANT_QUOTIENT_FUNCTION",
    }
}

fn cmd_eval(scene: &Path, point: &str, floats: bool) -> Result<ExitCode, UsageError> {
    let scene: Scene = read_json(scene)?;
    let point: Point =
        serde_json::from_str(point).map_err(|e| UsageError(format!("cannot parse point: {e}")))?;
    let v = eval(&scene.phi, &point);
    if floats {
        println!("{}", v.to_f64_lossy());
    } else {
        println!("{v}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(scene: &Path, out: Option<&Path>) -> Result<ExitCode, UsageError> {
    let scene: Scene = read_json(scene)?;
    let oracle = scene
        .oracle()
        .map_err(|e| UsageError(format!("refusing to certify: {e}")))?;
    let report = check_monotone_batch(&oracle, &scene.sampler())
        .map_err(|e| UsageError(e.to_string()))?;
    let json = serde_json::to_string_pretty(&report)?;
    emit(out.or(scene.out.as_deref().map(Path::new)), &json)?;
    Ok(match report.verdict {
        Verdict::Pass => ExitCode::SUCCESS,
        Verdict::Violation => ExitCode::from(1),
    })
}

#[derive(Serialize)]
struct PointReport {
    point: Point,
    component: Component,
    #[serde(skip_serializing_if = "Option::is_none")]
    characteristic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_error: Option<&'static str>,
}

fn cmd_classify(scene: &Path, points: &Path, out: Option<&Path>) -> Result<ExitCode, UsageError> {
    let scene: Scene = read_json(scene)?;
    let points: Vec<Point> = read_json(points)?;
    let phi = &scene.phi;
    let mut reports = Vec::with_capacity(points.len());
    for point in points {
        let component = component_of(phi, &point).map_err(|e| UsageError(e.to_string()))?;
        let (characteristic, witness, witness_error) = if component == Component::Level {
            let ch = is_characteristic(phi, &point).ok();
            match witness_line(phi, &point) {
                Ok(cert) => (ch, Some(serde_json::to_value(&cert)?), None),
                Err(e) => (ch, None, Some(error_code(&e))),
            }
        } else {
            (None, None, None)
        };
        reports.push(PointReport {
            point,
            component,
            characteristic,
            witness,
            witness_error,
        });
    }
    let half_space = scene.kernel.as_ref().map(|kernel| {
        match halfspace_from_quotient(phi, kernel) {
            Ok(Some(hs)) => json!({ "half_space": hs }),
            Ok(None) => json!({ "does_not_factor": true }),
            Err(e) => json!({ "error": error_code(&e) }),
        }
    });
    let doc = json!({ "points": reports, "quotient": half_space });
    emit(
        out.or(scene.out.as_deref().map(Path::new)),
        &serde_json::to_string_pretty(&doc)?,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_sample(
    scene: &Path,
    axis: u8,
    grid: u32,
    out: Option<&Path>,
    floats: bool,
) -> Result<ExitCode, UsageError> {
    if !(1..=3).contains(&axis) {
        return Err(UsageError("axis must be 1, 2, or 3".into()));
    }
    let scene: Scene = read_json(scene)?;
    let n = grid.max(1) as i64;
    // n consecutive integers centered on 0
    let lo = -(n / 2);
    let values: Vec<Rational> = (lo..lo + n).map(Rational::int).collect();
    let fmt = |v: &Rational| {
        if floats {
            v.to_f64_lossy().to_string()
        } else {
            v.to_string()
        }
    };
    let mut csv = String::from("tau1,tau2,tau3,z12,z13,z23,phi\n");
    if floats {
        csv.insert_str(0, "# lossy decimal output; rerun without --floats for exact values\n");
    }
    let mut skipped: u64 = 0;
    for t1 in &values {
        for t2 in &values {
            for z1 in &values {
                for z2 in &values {
                    for z3 in &values {
                        let taus = [t1.clone(), t2.clone()];
                        let zetas = [z1.clone(), z2.clone(), z3.clone()];
                        match graph_solve(&scene.phi, axis, &taus, &zetas) {
                            Ok(p) => {
                                let coords = p.to_vec6();
                                let row: Vec<String> = coords.iter().map(&fmt).collect();
                                csv.push_str(&row.join(","));
                                csv.push_str(",0\n");
                            }
                            Err(ClassifyError::ZeroPivotAtPoint) => skipped += 1,
                            Err(e) => return Err(UsageError(e.to_string())),
                        }
                    }
                }
            }
        }
    }
    csv.push_str(&format!("# skipped {skipped} grid points with vanishing pivot\n"));
    emit(out.or(scene.out.as_deref().map(Path::new)), &csv)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_cert(cert: &Path) -> Result<ExitCode, UsageError> {
    let cert: CertificateFile = read_json(cert)?;
    if cert.verify() {
        println!("PASS");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("FAIL");
        Ok(ExitCode::from(1))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Eval {
            scene,
            point,
            floats,
        } => cmd_eval(scene, point, *floats),
        Cmd::Check { scene, out } => cmd_check(scene, out.as_deref()),
        Cmd::Classify { scene, points, out } => cmd_classify(scene, points, out.as_deref()),
        Cmd::Sample {
            scene,
            axis,
            grid,
            out,
            floats,
        } => cmd_sample(scene, *axis, *grid, out.as_deref(), *floats),
        Cmd::VerifyCert { cert } => cmd_verify_cert(cert),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
