use std::io::Write;
use std::process::ExitCode;

use clap::builder::TypedValueParser as _;
use clap::{Parser, Subcommand};
use selmer_core::QImprimitiveType;
use selmer_lab::table::{render_all, Format};
use selmer_lab::tables::{TableOptions, Target};
use selmer_lab::verify::Suite;
use selmer_lab::{
    mc, report, tables, verify, DEFAULT_ENUMERATION_CAP, DEFAULT_MAX_DEGREE, DEFAULT_PRECISION,
    DEFAULT_PRIME_BOUND, EXIT_CHECK_FAILED, EXIT_USAGE, THREADS_ENV,
};

/// Tables, verification suites and Monte Carlo runs for 2-Selmer signature
/// images of even-degree number fields.
#[derive(Debug, Parser)]
#[command(name = "selmer-lab", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "md", value_parser = parse_format)]
    format: Format,

    /// Decimal places for floating cells.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION,
          value_parser = clap::value_parser!(u32).range(0..=15).map(|v| v as usize))]
    precision: usize,

    /// Primes up to this bound enter Euler products exactly.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME_BOUND,
          value_parser = clap::value_parser!(u64).range(2..=100_000_000))]
    prime_bound: u64,

    /// Largest bilinear-space dimension that may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP,
          value_parser = clap::value_parser!(u32).range(1..=24).map(|v| v as usize))]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a predicted table.
    Tables {
        /// s4-real, s4-mixed, s6-real, bi-trivial, quadratic or moments.
        #[arg(value_parser = parse_target)]
        target: Target,
        /// Largest degree in the bi-trivial table.
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Check closed forms against enumeration and mass identities.
    Verify {
        /// counts, distributions, masses or all.
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Machine-readable report.
        #[arg(long)]
        json: bool,
    },
    /// Sample uniform MTIs for a type and compare ranks with the exact law.
    Mc {
        #[arg(value_parser = parse_type)]
        ty: QImprimitiveType,
        r1: usize,
        r2: usize,
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the isotropy rank law of a type.
    Dist {
        #[arg(value_parser = parse_type)]
        ty: QImprimitiveType,
        r1: usize,
        r2: usize,
    },
    /// Print splitting symbols and local masses at a prime.
    Mass { degree: usize, prime: u64 },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: anyhow::Error| e.to_string())
}

fn parse_target(s: &str) -> Result<Target, String> {
    s.parse().map_err(|e: anyhow::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: anyhow::Error| e.to_string())
}

fn parse_type(s: &str) -> Result<QImprimitiveType, String> {
    s.parse().map_err(|e: selmer_core::Error| e.to_string())
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize =
        raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
            anyhow::anyhow!("{THREADS_ENV} must be a positive integer, got {raw:?}")
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()?;
    Ok(())
}

/// Rendered output plus whether every gated check passed.
fn execute(cli: &Cli) -> anyhow::Result<(String, bool)> {
    Ok(match &cli.command {
        Command::Tables { target, max_degree } => {
            let opts = TableOptions {
                prime_bound: cli.prime_bound,
                max_degree: *max_degree,
            };
            let table = tables::build(*target, &opts)?;
            (table.render(cli.format, cli.precision), true)
        }
        Command::Verify { suite, json } => {
            let checks = verify::run(*suite, cli.cap);
            let out = if *json || cli.format == Format::Json {
                verify::render_json(&checks)
            } else {
                verify::render_text(&checks)
            };
            (out, verify::all_passed(&checks))
        }
        Command::Mc {
            ty,
            r1,
            r2,
            samples,
            seed,
        } => {
            let r = mc::run(*ty, *r1, *r2, *samples, *seed, cli.cap)?;
            (
                render_all(&r.tables(), cli.format, cli.precision),
                r.passed(),
            )
        }
        Command::Dist { ty, r1, r2 } => {
            let t = report::dist_table(*ty, *r1, *r2)?;
            (t.render(cli.format, cli.precision), true)
        }
        Command::Mass { degree, prime } => {
            let t = report::mass_tables(*degree, *prime)?;
            (render_all(&t, cli.format, cli.precision), true)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    match execute(&cli) {
        Ok((out, passed)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::FAILURE;
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILED as u8)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
