use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use facecycle_cli::{
    cmd_bipartite, cmd_corpus, cmd_decompose, cmd_lattice, cmd_shelling, cmd_verify, load, CliError,
    Family, Method, Outcome, TargetSpec,
};

/// Exact polytope lattices, shellings and facial-cycle decompositions.
#[derive(Parser)]
#[command(name = "facecycle", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the relevant graph (with highlighted edges) as DOT to this file.
    #[arg(long, global = true)]
    emit_dot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the f-vector and every face.
    Lattice { input: PathBuf },
    /// Compute a line shelling and check each step.
    Shelling {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write an even subgraph as a symmetric difference of facial cycles.
    Decompose {
        input: PathBuf,
        /// Edge list `u-v,u-v,...` or `random:<k>:<seed>`.
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Method::Proof)]
        method: Method,
    },
    /// Compare graph bipartiteness with the parity of all 2-faces.
    Bipartite { input: PathBuf },
    /// Generate a polytope file.
    Corpus {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run every property check on one polytope.
    Verify {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        seeds: u64,
        #[arg(long, default_value_t = 20)]
        samples: u64,
    },
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Lattice { input } => Ok(cmd_lattice(&load(&input)?)),
        Command::Shelling { input, seed } => cmd_shelling(&load(&input)?, seed),
        Command::Decompose { input, target, seed, method } => {
            let loaded = load(&input)?;
            cmd_decompose(&loaded, &target.parse::<TargetSpec>()?, seed, method)
        }
        Command::Bipartite { input } => cmd_bipartite(&load(&input)?),
        Command::Corpus { family, dim, n, seed, out } => cmd_corpus(family, dim, n, seed, &out),
        Command::Verify { input, seeds, samples } => cmd_verify(&load(&input)?, seeds, samples),
    }
}

fn write_dot(path: &Path, dot: &str) -> Result<(), CliError> {
    std::fs::write(path, dot).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("FC_LOG")).init();
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(cli.command).and_then(|o| {
        if let (Some(path), Some(dot)) = (&cli.emit_dot, &o.dot) {
            write_dot(path, dot)?;
        }
        Ok(o)
    });
    match outcome {
        Ok(o) => {
            print!("{}", o.report.to_json());
            for line in &o.summary {
                eprintln!("{line}");
            }
            eprintln!("wall time {:.3}s", start.elapsed().as_secs_f64());
            if o.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
