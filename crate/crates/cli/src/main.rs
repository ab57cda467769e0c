//! `lgz`: class polynomials, zeta functions and point counts of loose graphs.

mod input;
mod render;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use lgz_core::grothendieck::{class_polynomial, trace};
use lgz_core::ihara::{ihara_inverse, IharaError};
use lgz_core::loosegraph::{generate, Family};
use lgz_core::pointcount::{count_points_with, is_prime, verify, CountOptions, DEFAULT_BUDGET, DEFAULT_PRIME_BOUND};
use lgz_core::zeta::f1_zeta;

#[derive(Parser)]
#[command(name = "lgz", version, about = "Counting polynomials and zeta functions of loose graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// `.lg` file, `-` for stdin, or a generator such as `gen:complete:5`
    #[arg(default_value = "-")]
    input: String,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Reject edges and loose edges on undeclared vertices
    #[arg(long)]
    strict: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Class polynomial in L
    Class(Common),
    /// Inverse F1-zeta function in factored form
    Zeta(Common),
    /// Inverse Ihara zeta function in u
    Ihara(Common),
    /// Brute-force point count over F_q
    Count {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_prime)]
        q: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Compare the class polynomial with point counts
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5", value_parser = parse_prime)]
        primes: Vec<u64>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Surgery table from a loose spanning tree back to the graph
    Trace(Common),
    /// Print a built-in graph as `.lg` text
    Gen {
        family: String,
        params: Vec<usize>,
    },
    /// Class polynomial, F1-zeta and Ihara zeta side by side
    Compare(Common),
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.trim().parse().map_err(|_| format!("{s:?} is not an integer"))?;
    if !is_prime(p) {
        return Err(format!("{p} is not prime"));
    }
    if p > DEFAULT_PRIME_BOUND {
        return Err(format!("{p} exceeds the prime bound {DEFAULT_PRIME_BOUND}"));
    }
    Ok(p)
}

/// Failure classes, mapped to exit codes.
enum Failure {
    /// Bad input text or arguments.
    Usage(anyhow::Error),
    /// Valid input outside an operation's domain.
    Domain(anyhow::Error),
    /// A verification check did not hold.
    Mismatch,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Mismatch => 3,
        }
    }
}

fn domain<E: Into<anyhow::Error>>(e: E) -> Failure {
    Failure::Domain(e.into())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let write = |out: &mut dyn Write, s: String| -> Result<(), Failure> {
        writeln!(out, "{s}").context("writing output").map_err(Failure::Domain)
    };
    match cli.command {
        Command::Gen { family, params } => {
            let fam = Family::from_name(&family, &params).map_err(|e| Failure::Usage(e.into()))?;
            let g = generate(fam).map_err(|e| Failure::Usage(e.into()))?;
            write!(out, "{}", g.to_lg()).context("writing output").map_err(Failure::Domain)
        }
        Command::Class(c) => {
            let g = input::load(&c)?;
            let p = class_polynomial(&g).map_err(domain)?;
            write(out, render::class(&p, c.json))
        }
        Command::Zeta(c) => {
            let g = input::load(&c)?;
            let z = f1_zeta(&class_polynomial(&g).map_err(domain)?);
            write(out, render::zeta(&z, c.json))
        }
        Command::Ihara(c) => {
            let g = input::load(&c)?;
            let p = ihara_inverse(&g).map_err(domain)?;
            write(out, render::ihara(&p, c.json))
        }
        Command::Count { common, q, budget } => {
            let g = input::load(&common)?;
            let opts = CountOptions { budget, ..Default::default() };
            let n = count_points_with(&g, q, opts).map_err(domain)?;
            write(out, render::count(q, n, common.json))
        }
        Command::Verify { common, primes, budget } => {
            let g = input::load(&common)?;
            let opts = CountOptions { budget, ..Default::default() };
            let report = verify(&g, &primes, opts).map_err(domain)?;
            write(out, render::verify(&report, common.json))?;
            if report.ok {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
        Command::Trace(c) => {
            let g = input::load(&c)?;
            let t = trace(&g).map_err(domain)?;
            write(out, render::trace(&t, c.json))
        }
        Command::Compare(c) => {
            let g = input::load(&c)?;
            let class = class_polynomial(&g).map_err(domain)?;
            let ihara: Result<_, IharaError> = ihara_inverse(&g);
            write(out, render::compare(&class, &f1_zeta(&class), &ihara, c.json))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(e) | Failure::Domain(e) => eprintln!("error: {e:#}"),
                Failure::Mismatch => eprintln!("error: {}", anyhow!("verification failed")),
            }
            ExitCode::from(f.code())
        }
    }
}
