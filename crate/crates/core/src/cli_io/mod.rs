//! Batch front end: JSON problem configs in, JSON and CSV artifacts out.
//!
//! Every float in an artifact is written with 17 significant digits, so a
//! run is byte-for-byte reproducible from its config and seed. Files are
//! written to a temporary name in the output directory and renamed into
//! place.
//!
//! Exit codes: 0 success, 1 solver failure or a degeneracy flagged under
//! `fail_on_degenerate`, 2 configuration error, 3 `λ` too close to the
//! Dirichlet spectrum.

mod commands;
mod config;
mod json;

use std::path::{Path, PathBuf};

use thiserror::Error;

pub use commands::{run_moperator, run_solve, run_verify, ReportEntry, RunReport};
pub use config::{
    Discretization, FactorSpec, Format, FunctionSpec, Monomials, NodeSpec, OperatorsSpec,
    OutputOptions, ProblemConfig, ProblemKind, SampleValues, Samples, ShiftRotation, ShiftSamples,
    ShiftSpec, SolverOptions, SourceSpec, TermSpec, VerifyOptions, SCHEMA_VERSION,
};
pub use json::{
    boundary_from_triples, boundary_triples, complex_pair, csv_rows, fmt_f64, to_json_string,
    DiskFunctionJson,
};

use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SOLVER: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_SPECTRUM: i32 = 3;

/// Environment variable capping the number of solver threads.
pub const THREADS_ENV: &str = "BVPNODE_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Solver(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) => EXIT_CONFIG,
            Self::Io { .. } => EXIT_SOLVER,
            Self::Solver(e) => match e {
                Error::SpectrumProximity { .. } => EXIT_SPECTRUM,
                Error::InvalidShift(_)
                | Error::NonRealInput(_)
                | Error::InvalidGrid { .. }
                | Error::ModeOutOfRange { .. }
                | Error::TruncationMismatch { .. }
                | Error::InvalidArgument(_) => EXIT_CONFIG,
                Error::SolverFailure(_) | Error::WrongSide { .. } => EXIT_SOLVER,
            },
        }
    }
}

/// Sizes the global thread pool from [`THREADS_ENV`] when it is set.
pub fn init_thread_pool() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            CliError::Config(format!(
                "{THREADS_ENV} must be a positive integer, got '{value}'"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Config(format!("thread pool: {e}")))
}

/// Writes `contents` to `dir/name` through a temporary file and a rename.
pub fn write_atomic(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, CliError> {
    let io_err = |path: &Path| {
        let path = path.to_path_buf();
        move |source| CliError::Io { path, source }
    };
    std::fs::create_dir_all(dir).map_err(io_err(dir))?;
    let target = dir.join(name);
    let tmp = dir.join(format!(".{name}.tmp"));
    std::fs::write(&tmp, contents).map_err(io_err(&tmp))?;
    std::fs::rename(&tmp, &target).map_err(io_err(&target))?;
    Ok(target)
}
