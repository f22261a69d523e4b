use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use bredon_core::chart::{
    degree_chart, plane_to_csv, render_ascii, render_plane_ascii, to_csv, to_json, weight_plane,
    Rect,
};
use bredon_core::grading::{MotDegree, RO2Degree};
use bredon_core::ring::{basis_at, multiply, parse, RingId};
use bredon_core::verify::{self, Report, Window, DEFAULT_SEED, DEFAULT_TRIALS, SUITES};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Bredon cohomology of C₂ over ℂ with ℤ/2 coefficients: queries, charts and verification.
#[derive(Parser)]
#[command(name = "bredon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension and basis in one degree.
    Dim(DimArgs),
    /// Product of two expressions (for modules, the first acts on the second).
    Mul {
        #[arg(long)]
        ring: RingId,
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Betti realization of an expression.
    Realize {
        #[arg(long)]
        ring: RingId,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Dimension chart over a window, or the region map of the weight plane.
    Chart(ChartArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct DimArgs {
    #[arg(long)]
    ring: RingId,
    /// a [p]
    #[arg(long, num_args = 1..=2, allow_negative_numbers = true, required = true)]
    deg: Vec<i32>,
    /// b [q]
    #[arg(long, num_args = 1..=2, allow_negative_numbers = true)]
    wt: Vec<i32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Json,
    Csv,
}

#[derive(Args)]
struct ChartArgs {
    #[arg(long, required_unless_present = "plane", conflicts_with = "plane")]
    ring: Option<RingId>,
    /// Fixed weight b q.
    #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["B", "Q"])]
    wt: Vec<i32>,
    /// Region letters over the weight plane instead of dimensions.
    #[arg(long)]
    plane: bool,
    /// xmin xmax ymin ymax: (a, p) for degree charts, (b, q) for the weight plane.
    #[arg(long, num_args = 4, allow_negative_numbers = true, required = true,
          value_names = ["XMIN", "XMAX", "YMIN", "YMAX"])]
    window: Vec<i32>,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of figures, vanishing, exactness, axioms, realization, example-p1, crosschecks, all.
    suite: String,
    /// Either N for [−N, N] on every axis, or amin amax pmin pmax bmin bmax qmin qmax.
    #[arg(long, num_args = 1..=8, allow_negative_numbers = true)]
    window: Vec<i32>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

/// A failure that should exit with status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn pair(v: &[i32]) -> RO2Degree {
    RO2Degree::new(
        v.first().copied().unwrap_or(0),
        v.get(1).copied().unwrap_or(0),
    )
}

fn cmd_dim(args: &DimArgs) -> Result<String> {
    let d = MotDegree::new(pair(&args.deg), pair(&args.wt));
    let basis: Vec<String> = basis_at(args.ring, d).iter().map(|e| e.canonical()).collect();
    Ok(if basis.is_empty() {
        "0:".to_owned()
    } else {
        format!("{}: {}", basis.len(), basis.join(", "))
    })
}

fn cmd_chart(args: &ChartArgs) -> Result<String> {
    let w = &args.window;
    let rect = Rect::new(w[0], w[1], w[2], w[3]).map_err(|e| usage(e.to_string()))?;
    if args.plane {
        let cells = weight_plane(rect);
        return Ok(match args.format {
            Format::Ascii => render_plane_ascii(rect),
            Format::Json => to_json(&cells) + "\n",
            Format::Csv => plane_to_csv(&cells),
        });
    }
    let ring = args.ring.expect("clap requires --ring without --plane");
    let wt = pair(&args.wt);
    Ok(match args.format {
        Format::Ascii => render_ascii(ring, wt, rect),
        Format::Json => to_json(&degree_chart(ring, wt, rect)) + "\n",
        Format::Csv => to_csv(&degree_chart(ring, wt, rect)),
    })
}

fn window_from(v: &[i32]) -> Result<Window> {
    match v {
        [] => Ok(Window::default()),
        [n] if *n >= 0 => Ok(Window::symmetric(*n as u32)),
        [n] => Err(usage(format!("window size must be nonnegative, got {n}"))),
        [a0, a1, p0, p1, b0, b1, q0, q1] => {
            Window::new(*a0, *a1, *p0, *p1, *b0, *b1, *q0, *q1).map_err(|e| usage(e.to_string()))
        }
        _ => Err(usage("--window takes either 1 or 8 integers")),
    }
}

fn print_report(r: &Report) {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    println!("[{status}] {}", r.suite);
    for c in r.checks.iter() {
        let mark = if c.pass { "ok  " } else { "FAIL" };
        if c.location.is_empty() {
            println!("  {mark} {}: {}", c.name, c.actual);
        } else {
            println!(
                "  {mark} {} at {:?}: expected {}, got {}",
                c.name, c.location, c.expected, c.actual
            );
        }
    }
}

/// Returns whether every check passed.
fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let w = window_from(&args.window)?;
    if args.trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    let reports = if args.suite == "all" {
        verify::verify_all(&w, args.seed, args.trials)
    } else {
        match verify::run_suite(&args.suite, &w, args.seed, args.trials) {
            Some(r) => vec![r],
            None => {
                return Err(usage(format!(
                    "unknown suite '{}' (expected one of {} or all)",
                    args.suite,
                    SUITES.join(", ")
                )))
            }
        }
    };
    for r in &reports {
        print_report(r);
    }
    if let Some(path) = &args.report {
        let json = serde_json::to_string_pretty(&reports)?;
        fs::write(path, json + "\n")
            .with_context(|| format!("writing report to {}", path.display()))?;
    }
    let passed = reports.iter().all(Report::passed);
    let failures: usize = reports.iter().map(|r| r.failures().count()).sum();
    println!(
        "{}: {} suites, {failures} failing checks",
        if passed { "PASS" } else { "FAIL" },
        reports.len()
    );
    Ok(passed)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let out = match cli.command {
        Command::Dim(args) => cmd_dim(&args)?,
        Command::Mul { ring, lhs, rhs } => multiply(ring, &lhs, &rhs)
            .map_err(|e| usage(e.to_string()))?
            .canonical(),
        Command::Realize { ring, expr } => parse(ring, &expr)
            .map_err(|e| usage(e.to_string()))?
            .realize()
            .map_err(|e| usage(e.to_string()))?
            .canonical(),
        Command::Chart(args) => {
            print!("{}", cmd_chart(&args)?);
            return Ok(ExitCode::SUCCESS);
        }
        Command::Verify(args) => {
            return Ok(if cmd_verify(&args)? {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            });
        }
    };
    println!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
