//! Command-line front end: point ingestion, norm selection, algorithm
//! dispatch, structured output, and SVG plots.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use mindisk::elzinga_hearn::solve_eh;
use mindisk::error::Error;
use mindisk::io::{format_structured, generate_points, parse_norm_spec, parse_points};
use mindisk::oracle::{solve_enumeration, solve_minimax_descent};
use mindisk::report::{Algorithm, SolveReport};
use mindisk::shamos_hoey::solve_sh;
use mindisk::svg;
use mindisk::{Norm, PointSet, Vec2};

const EXIT_USAGE: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_NOT_STRICTLY_CONVEX: u8 = 4;
const EXIT_SIZE_LIMIT: u8 = 5;
const EXIT_INTERNAL_INCONSISTENCY: u8 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Eh,
    Sh,
    Oracle,
    Descent,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Structured,
}

/// Minimal enclosing disks in strictly convex normed planes.
#[derive(Parser, Debug)]
#[command(name = "mindisk", version)]
struct Cli {
    /// Point file: one point per line, comma or whitespace separated,
    /// '#' starts a comment.
    #[arg(long)]
    input: Option<PathBuf>,

    /// Norm spec: "p:<value>" with 1 < value < inf, e.g. "p:4".
    #[arg(long, default_value = "p:2")]
    norm: String,

    /// Solver to run; "all" runs every solver and checks agreement.
    #[arg(long, value_enum, default_value_t = Algo::Eh)]
    algo: Algo,

    /// Feasibility tolerance, relative to the disk radius.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,

    /// Write an SVG plot of the instance and solution here.
    #[arg(long)]
    svg: Option<PathBuf>,

    /// Generate this many uniform points in [-1,1]² instead of reading a file.
    #[arg(long)]
    generate: Option<usize>,

    /// Seed for --generate.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) | Error::NonFinite(..) => EXIT_PARSE,
            Error::NotStrictlyConvex(_) => EXIT_NOT_STRICTLY_CONVEX,
            Error::SizeLimit { .. } => EXIT_SIZE_LIMIT,
            Error::InternalInconsistency(_) => EXIT_INTERNAL_INCONSISTENCY,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("mindisk: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load_points(cli: &Cli) -> Result<Vec<Vec2>, Failure> {
    match (&cli.input, cli.generate) {
        (Some(_), Some(_)) => Err(Failure::new(
            EXIT_USAGE,
            "--input and --generate are mutually exclusive",
        )),
        (None, None) => Err(Failure::new(
            EXIT_USAGE,
            "either --input or --generate is required",
        )),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display()))
            })?;
            Ok(parse_points(&text)?)
        }
        (None, Some(n)) => Ok(generate_points(n, cli.seed)),
    }
}

fn run_solver(norm: &Norm, points: &PointSet, algo: Algo, tol: f64) -> Result<SolveReport, Failure> {
    let report = match algo {
        Algo::Eh => solve_eh(norm, points, tol)?,
        Algo::Sh => solve_sh(norm, points, tol)?,
        Algo::Oracle => solve_enumeration(norm, points, tol)?,
        Algo::Descent => {
            let disk = solve_minimax_descent(norm, points, tol)?;
            // the descent center is only tol-accurate, so use a looser band
            let band = 20.0 * tol * disk.radius.max(1.0);
            let support =
                mindisk::report::support_points(norm, points.points(), disk.center, disk.radius, band);
            SolveReport { disk, support, iterations: Vec::new(), algorithm: Algorithm::Descent }
        }
        Algo::All => unreachable!("handled by the caller"),
    };
    Ok(report)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if cli.tol.is_nan() || cli.tol <= 0.0 {
        return Err(Failure::new(EXIT_USAGE, "--tol must be positive"));
    }
    let norm = parse_norm_spec(&cli.norm).map_err(|e| match e {
        Error::Parse(msg) => Failure::new(EXIT_USAGE, msg),
        other => Failure::from(other),
    })?;
    let points = PointSet::new(load_points(cli)?)?;

    let (report, discrepancy) = if cli.algo == Algo::All {
        let eh = run_solver(&norm, &points, Algo::Eh, cli.tol)?;
        let sh = run_solver(&norm, &points, Algo::Sh, cli.tol)?;
        let oracle = run_solver(&norm, &points, Algo::Oracle, cli.tol)?;
        let descent = run_solver(&norm, &points, Algo::Descent, cli.tol)?;
        let radii = [eh.disk.radius, sh.disk.radius, oracle.disk.radius, descent.disk.radius];
        let mut disc: f64 = 0.0;
        for a in &radii {
            for b in &radii {
                disc = disc.max((a - b).abs());
            }
        }
        let scale = 1.0 + oracle.disk.radius;
        if disc > 1e-6 * scale {
            return Err(Failure::new(
                EXIT_INTERNAL_INCONSISTENCY,
                format!("solvers disagree: max radius discrepancy {disc}"),
            ));
        }
        (eh, Some(disc))
    } else {
        (run_solver(&norm, &points, cli.algo, cli.tol)?, None)
    };

    match cli.format {
        Format::Plain => {
            println!(
                "center {} {} radius {}",
                report.disk.center.x, report.disk.center.y, report.disk.radius
            );
            println!("support_count {}", report.support.len());
            for p in &report.support {
                println!("support {} {}", p.x, p.y);
            }
            println!("iterations {}", report.iterations.len());
            println!("algorithm {}", report.algorithm.name());
        }
        Format::Structured => {
            print!("{}", format_structured(&report));
        }
    }
    if let Some(d) = discrepancy {
        println!("max_radius_discrepancy {d}");
    }

    if let Some(path) = &cli.svg {
        let doc = svg::render(&norm, points.points(), &report.disk);
        std::fs::write(path, doc).map_err(|e| {
            Failure::new(EXIT_PARSE, format!("cannot write {}: {e}", path.display()))
        })?;
    }
    Ok(())
}
