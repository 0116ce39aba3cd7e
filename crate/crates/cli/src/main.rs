use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::bail;
use clap::{Parser, Subcommand};
use mixed_spectra::VerifyConfig;
use mixed_spectra_cli::batch::{run_batch, write_witnesses, BatchParams};
use mixed_spectra_cli::commands::{self, MatrixKind, Output, EXIT_INPUT};
use mixed_spectra_cli::format::load;

/// Spectra of mixed graphs under the Eisenstein-unit Hermitian adjacency
/// matrix and its signless Laplacian.
///
/// Exit status: 0 when every applicable check holds, 1 when an eigenvalue
/// inequality fails, 2 when an exact identity fails, 3 on input errors.
#[derive(Parser, Debug)]
#[command(name = "mixed-spectra", version)]
struct Cli {
    /// Eigensolver convergence tolerance (off-diagonal norm).
    #[arg(long, global = true, env = "MIXED_SPECTRA_TOL", value_name = "TOL")]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sorted eigenvalues, trace and determinant of H or Q.
    Spectrum {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "q")]
        matrix: MatrixKind,
        /// Also print the exact characteristic polynomial.
        #[arg(long)]
        exact_charpoly: bool,
        #[arg(long)]
        json: bool,
        /// Write the report to this file instead of stdout.
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Run every identity and bound check on a graph.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Print the algebraic line graph in the same file format.
    Linegraph {
        file: PathBuf,
        /// Write the graph to this file instead of stdout.
        #[arg(long, value_name = "FILE")]
        emit_file: Option<PathBuf>,
    },
    /// Apply a switching by a vertex gauge of powers of ω.
    Switch {
        file: PathBuf,
        /// Comma-separated `vertex:power` pairs covering every vertex, power in {0, 1, 2}.
        #[arg(long)]
        gauge: String,
        #[arg(long, value_name = "FILE")]
        emit_file: Option<PathBuf>,
    },
    /// Run every check on random graphs and summarize.
    Batch {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.3)]
        p_digon: f64,
        #[arg(long, default_value_t = 0.3)]
        p_arc: f64,
        #[arg(long)]
        json: bool,
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
        /// Directory for graph files of failing trials.
        #[arg(long, value_name = "DIR", default_value = "witnesses")]
        witness_dir: PathBuf,
    },
}

fn config(tol: Option<f64>) -> anyhow::Result<VerifyConfig> {
    let mut cfg = VerifyConfig::default();
    if let Some(tol) = tol {
        if !(tol.is_finite() && tol > 0.0) {
            bail!("tolerance must be positive and finite, got {tol}");
        }
        cfg.convergence_tol = tol;
    }
    Ok(cfg)
}

fn emit(out: Output, file: Option<&Path>) -> anyhow::Result<u8> {
    match file {
        Some(path) => std::fs::write(path, &out.stdout)
            .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))?,
        None => std::io::stdout().write_all(out.stdout.as_bytes())?,
    }
    eprint!("{}", out.stderr);
    Ok(out.code)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let cfg = config(cli.tol)?;
    match cli.command {
        Command::Spectrum { file, matrix, exact_charpoly, json, output } => {
            let x = load(&file)?;
            emit(commands::spectrum(&x, matrix, exact_charpoly, json, &cfg)?, output.as_deref())
        }
        Command::Verify { file, json, output } => {
            let x = load(&file)?;
            emit(commands::verify(&x, json, &cfg)?, output.as_deref())
        }
        Command::Linegraph { file, emit_file } => {
            let x = load(&file)?;
            emit(commands::linegraph(&x), emit_file.as_deref())
        }
        Command::Switch { file, gauge, emit_file } => {
            let x = load(&file)?;
            let gauge = commands::parse_gauge(&gauge, x.vertex_count())?;
            emit(commands::switch(&x, &gauge, &cfg)?, emit_file.as_deref())
        }
        Command::Batch { n_max, trials, seed, p_digon, p_arc, json, output, witness_dir } => {
            let params = BatchParams { n_max, trials, seed, p_digon, p_arc };
            let summary = run_batch(&params, &cfg)?;
            write_witnesses(&summary, &witness_dir)?;
            let stdout = if json {
                let mut s = serde_json::to_string_pretty(&summary)?;
                s.push('\n');
                s
            } else {
                summary.to_text()
            };
            emit(Output { stdout, stderr: String::new(), code: summary.exit_code() }, output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
