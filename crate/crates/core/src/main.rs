use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ribbonres::cli::{self, Command, Format, RunConfig};
use ribbonres::report::Fault;
use ribbonres::{CoefficientRing, Composition};

#[derive(Parser)]
#[command(name = "ribbonres", version, about = "Ribbon Schur modules and resolutions of Veronese modules")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Window of the minimal resolution of S^(d,r)
    Resolve,
    /// Betti table of S^(d,r)
    Betti,
    /// Graded components of M ⊗_R M′
    Tensor,
    /// Tor_i^R(M, M′)
    Tor,
    /// Hom_R(M, M′)
    Hom,
    /// Homology of rank-selected Boolean lattices
    Poset,
    /// Symmetric function identities
    Symcheck,
    /// Every verification over the default grid
    VerifyAll,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    SignFlip,
}

#[derive(Args)]
struct Common {
    #[arg(long, global = true)]
    d: Option<usize>,
    #[arg(long, global = true)]
    r: Option<usize>,
    #[arg(long = "rprime", global = true)]
    r_prime: Option<usize>,
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    /// q, z or fp:<prime>
    #[arg(long, global = true, default_value = "q", value_parser = parse_ring)]
    ring: CoefficientRing,
    #[arg(long = "imax", global = true)]
    i_max: Option<usize>,
    #[arg(long = "degmax", global = true)]
    deg_max: Option<usize>,
    #[arg(long, global = true)]
    i: Option<usize>,
    /// composition for the poset command, e.g. 1,2,1
    #[arg(long, global = true, value_parser = parse_composition)]
    alpha: Option<Composition>,
    /// use the full acceptance bounds in verify-all
    #[arg(long, global = true)]
    full: bool,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: OutFormat,
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// report zero for every timing
    #[arg(long = "no-timings", global = true)]
    no_timings: bool,
    #[arg(long = "inject-fault", global = true, hide = true, value_enum)]
    inject_fault: Option<FaultArg>,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

fn parse_ring(s: &str) -> Result<CoefficientRing, String> {
    s.parse().map_err(|e: ribbonres::Error| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: ribbonres::Error| e.to_string())
}

fn config(cli: Cli) -> RunConfig {
    let command = match cli.command {
        Cmd::Resolve => Command::Resolve,
        Cmd::Betti => Command::Betti,
        Cmd::Tensor => Command::Tensor,
        Cmd::Tor => Command::Tor,
        Cmd::Hom => Command::Hom,
        Cmd::Poset => Command::Poset,
        Cmd::Symcheck => Command::Symcheck,
        Cmd::VerifyAll => Command::VerifyAll,
    };
    let c = cli.common;
    let threads = c.threads.or_else(|| std::env::var("RIBBONRES_THREADS").ok().and_then(|v| v.parse().ok()));
    RunConfig {
        command,
        d: c.d,
        r: c.r,
        r_prime: c.r_prime,
        n: c.n,
        ring: c.ring,
        i_max: c.i_max,
        deg_max: c.deg_max,
        i: c.i,
        alpha: c.alpha,
        full: c.full,
        format: match c.format {
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
        },
        output: c.output,
        threads,
        timings: !c.no_timings,
        fault: c.inject_fault.map(|FaultArg::SignFlip| Fault::SignFlip),
        verbose: c.verbose,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let cfg = config(cli);
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if let Some(t) = cfg.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let outcome = match cli::run(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(cli::error_exit_code(&e) as u8);
        }
    };
    let text = match cli::render(&outcome, cfg.format) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match &cfg.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    if cfg.verbose > 0 {
        if let Some(f) = outcome.first_failure() {
            eprintln!("first failure: {} {}", f.check, f.params);
        }
    }
    ExitCode::from(outcome.exit_code() as u8)
}
