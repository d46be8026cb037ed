use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use bvpnode::cli_io::{
    init_thread_pool, run_moperator, run_solve, run_verify, CliError, ProblemConfig, ProblemKind,
    RunReport,
};
use clap::{Parser, Subcommand};

/// Operator-node boundary value problem solver on the unit disk.
#[derive(Parser)]
#[command(name = "bvpnode", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the node identity suite and write verify.json.
    Verify {
        /// Problem config of kind "verify"; defaults apply when omitted.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Solve the problem described by a config file.
    Solve {
        /// Problem config (JSON).
        #[arg(long)]
        config: PathBuf,
        /// Output directory, created if missing.
        #[arg(long)]
        out: PathBuf,
    },
    /// Assemble and export the M-operator.
    Moperator {
        /// Problem config (JSON).
        #[arg(long)]
        config: PathBuf,
        /// Output directory, created if missing.
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> Result<RunReport, CliError> {
    init_thread_pool()?;
    match cli.command {
        Command::Verify { config, out } => {
            let cfg = match config {
                Some(path) => ProblemConfig::load(&path)?,
                None => ProblemConfig::defaults(ProblemKind::Verify),
            };
            run_verify(&cfg, &out)
        }
        Command::Solve { config, out } => run_solve(&ProblemConfig::load(&config)?, &out),
        Command::Moperator { config, out } => run_moperator(&ProblemConfig::load(&config)?, &out),
    }
}

fn print_report(report: &RunReport) {
    for e in &report.entries {
        let residuals: Vec<String> = e
            .residuals
            .iter()
            .map(|(k, v)| format!("{k}={v:.3e}"))
            .collect();
        let mut line = format!(
            "{} [{}] {}",
            e.name,
            if e.pass { "pass" } else { "FAIL" },
            residuals.join(" ")
        );
        if let (Some(rank), Some(k)) = (e.rank, e.kernel_dim) {
            line.push_str(&format!(" rank={rank} kernel_dim={k}"));
        }
        if let Some(d) = &e.degeneracy {
            line.push_str(&format!(" degeneracy={d}"));
        }
        println!("{line}");
    }
    for c in report.identities.iter().flatten() {
        println!(
            "{:<40} {:>10.3e} tol {:>7.0e} [{}]",
            c.identity,
            c.max_error,
            c.tolerance,
            if c.pass { "pass" } else { "FAIL" }
        );
    }
    for path in &report.artifacts {
        println!("wrote {}", path.display());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(cli) {
        Ok(report) => {
            print_report(&report);
            eprintln!("{} finished in {:.2?}", report.command, start.elapsed());
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
