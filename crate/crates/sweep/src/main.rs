use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cuboid_core::cuboidpoly::{
    classify_case, cuboid_poly, expected_factorization, normalize_params,
};
use cuboid_core::zirred::zassenhaus_factor;
use cuboid_sweep::{run, OutputFormat, SweepConfig, Task};

/// Exact-arithmetic sweeps over the cuboid polynomial families.
#[derive(Parser)]
#[command(name = "cuboid-sweep", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify irreducibility of the degree-8 cofactor over coprime pairs a ≠ u
    Conjecture1(RunArgs),
    /// Verify irreducibility of the degree-10 cofactor over coprime pairs p ≠ q
    Conjecture2(RunArgs),
    /// Verify the degree-12 family over coprime triples: general triples for
    /// irreducibility, special triples against their closed-form factorizations
    Conjecture3(RunArgs),
    /// Search every coprime triple for a rational root satisfying the cuboid
    /// inequalities (a hit would be a perfect-cuboid witness)
    Theorem41(RunArgs),
    /// Verify the six symbolic edge/diagonal identities (--max is ignored)
    Identities(RunArgs),
    /// Factor the degree-12 polynomial for one parameter triple
    Factor {
        a: u64,
        b: u64,
        u: u64,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Inclusive upper bound for every swept parameter
    #[arg(long, default_value_t = 22)]
    max: u64,
    /// Worker threads (results are emitted in tuple order regardless)
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Global seed for the randomized modular splitter
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Primes sampled by the degree-pattern sieve before full factorization
    #[arg(long, default_value_t = 25)]
    prime_budget: usize,
    /// Report file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format
    #[arg(long, value_enum, default_value_t = FormatArg::Jsonl)]
    format: FormatArg,
    /// Checkpoint file for resumable runs (requires --out)
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Continue from the checkpoint instead of starting over
    #[arg(long)]
    resume: bool,
    /// Stop cleanly after this many records (the checkpoint stays resumable)
    #[arg(long, hide = true)]
    halt_after: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Jsonl,
    Csv,
}

impl RunArgs {
    fn into_config(self, task: Task) -> SweepConfig {
        SweepConfig {
            task,
            max: self.max,
            prime_budget: self.prime_budget,
            seed: self.seed,
            workers: self.workers,
            out: self.out,
            format: match self.format {
                FormatArg::Jsonl => OutputFormat::Jsonl,
                FormatArg::Csv => OutputFormat::Csv,
            },
            checkpoint: self.checkpoint,
            resume: self.resume,
            halt_after: self.halt_after,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match cli.command {
        Command::Conjecture1(args) => args.into_config(Task::Conjecture1),
        Command::Conjecture2(args) => args.into_config(Task::Conjecture2),
        Command::Conjecture3(args) => args.into_config(Task::Conjecture3),
        Command::Theorem41(args) => args.into_config(Task::Theorem41),
        Command::Identities(args) => args.into_config(Task::Identities),
        Command::Factor { a, b, u } => return factor_command(a, b, u),
    };
    match run(&config) {
        Ok(outcome) => {
            let s = &outcome.summary;
            if outcome.halted {
                eprintln!(
                    "{}: halted after {} records (resume with --resume)",
                    s.task, s.enumerated
                );
                return ExitCode::SUCCESS;
            }
            eprintln!(
                "{} max={}: {} enumerated, {} skipped, {} counterexamples, {} ms",
                s.task,
                s.max,
                s.enumerated,
                s.skipped.values().sum::<u64>(),
                s.counterexamples.len(),
                s.wall_millis
            );
            match s.exit_code() {
                0 => ExitCode::SUCCESS,
                code => ExitCode::from(code as u8),
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}

fn factor_command(a: u64, b: u64, u: u64) -> ExitCode {
    let triple = match normalize_params(a.into(), b.into(), u.into()) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    println!("triple: {triple} (normalized from a={a}, b={b}, u={u})");
    let tag = classify_case(&triple);
    println!("case: {tag}");
    let poly = cuboid_poly(&triple);
    println!("P(t) = {poly}");
    let factorization = zassenhaus_factor(&poly);
    println!("factorization: {factorization}");
    if let Some(expected) = expected_factorization(&triple) {
        let matches = expected.expand() == poly;
        println!(
            "closed-form identity: {}",
            if matches { "verified" } else { "MISMATCH" }
        );
        if !matches {
            return ExitCode::from(2);
        }
    }
    ExitCode::SUCCESS
}
