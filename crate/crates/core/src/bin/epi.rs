use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use epigroup::report::{cmd_check, cmd_inspect, cmd_lattice, cmd_scan, cmd_verify, LatticeSource, ScanOptions, DEFAULT_SEED};

/// Finite epigroups, identities, derivation chains and lattice elements.
///
/// File arguments may be `@name` to use a shipped fixture.
#[derive(Parser)]
#[command(name = "epi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized spot checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Keep one model per isomorphism class.
    #[arg(long, global = true)]
    dedupe: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check an identity file in a Cayley table.
    Check { epigroup: String, identities: String },
    /// Print pseudoinverses, idempotents, group elements and flags.
    Inspect { epigroup: String },
    /// Replay the derivation chains of a chain file.
    Verify { chains: String },
    /// Classify lattice elements, or survey all lattices up to `--size`.
    Lattice {
        #[arg(required_unless_present = "size", conflicts_with = "size")]
        lattice: Option<String>,
        #[arg(long)]
        size: Option<usize>,
    },
    /// Enumerate all tables of an order and check the invariants.
    Scan { order: usize, identities: Option<String> },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check { epigroup, identities } => cmd_check(epigroup, identities),
        Command::Inspect { epigroup } => cmd_inspect(epigroup),
        Command::Verify { chains } => cmd_verify(chains),
        Command::Lattice { lattice, size } => {
            let source = match (lattice, size) {
                (Some(f), _) => LatticeSource::File(f.clone()),
                (None, Some(n)) => LatticeSource::Enumerate { max_size: *n, dedupe: cli.dedupe },
                (None, None) => unreachable!("clap requires one of them"),
            };
            cmd_lattice(&source, cli.jobs)
        }
        Command::Scan { order, identities } => {
            let opts = ScanOptions { jobs: cli.jobs, dedupe: cli.dedupe, seed: cli.seed };
            cmd_scan(*order, identities.as_deref(), &opts)
        }
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    for line in &report.summary {
        println!("{line}");
    }
    println!("{} ({} ms)", if report.passed { "PASS" } else { "FAIL" }, report.timing_ms);
    if let Some(path) = &cli.out {
        if let Err(e) = report.write_json(path) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(report.exit_code())
}
