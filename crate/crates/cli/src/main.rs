use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use oddcut_cli::commands::EXIT_INPUT;
use oddcut_cli::{cmd_gomory_hu, cmd_separate, cmd_tcut, FileMode, Flags, Output};

/// Exact blossom separation for b-matching polytopes.
#[derive(Parser)]
#[command(name = "oddcut", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Cross-check the result against brute-force enumeration (small inputs only).
    #[arg(long)]
    oracle_check: bool,
    /// Print the number of max-flow computations as `MAXFLOWS <k>`.
    #[arg(long)]
    count_maxflows: bool,
}

impl Common {
    fn flags(&self) -> Flags {
        Flags {
            oracle_check: self.oracle_check,
            count_maxflows: self.count_maxflows,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Find a most violated blossom inequality, or report that none exists.
    ///
    /// Exit status: 0 no violation, 1 violation, 2 input error, 3 oracle mismatch.
    Separate {
        instance: PathBuf,
        point: PathBuf,
        /// Expected instance mode; must match the file header.
        #[arg(long, value_enum)]
        mode: Option<FileMode>,
        #[command(flatten)]
        common: Common,
    },
    /// Build a Gomory-Hu cut-tree.
    GomoryHu {
        graph: PathBuf,
        /// Terminal vertices (default: all).
        #[arg(short = 'X', value_delimiter = ',', num_args = 1)]
        terminals: Option<Vec<String>>,
        #[command(flatten)]
        common: Common,
    },
    /// Find a minimum T-cut.
    Tcut {
        graph: PathBuf,
        /// Terminal set T, of even size.
        #[arg(short = 'T', value_delimiter = ',', num_args = 1, required = true)]
        terminals: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn read(path: &Path) -> Result<String, Output> {
    std::fs::read_to_string(path).map_err(|e| Output {
        stdout: String::new(),
        stderr: format!("error: {}: {e}\n", path.display()),
        code: EXIT_INPUT,
    })
}

fn run(cli: Cli) -> Result<Output, Output> {
    Ok(match cli.command {
        Command::Separate {
            instance,
            point,
            mode,
            common,
        } => cmd_separate(&read(&instance)?, &read(&point)?, mode, common.flags()),
        Command::GomoryHu {
            graph,
            terminals,
            common,
        } => cmd_gomory_hu(&read(&graph)?, terminals.as_deref(), common.flags()),
        Command::Tcut {
            graph,
            terminals,
            common,
        } => cmd_tcut(&read(&graph)?, &terminals, common.flags()),
    })
}

fn main() -> ExitCode {
    let out = run(Cli::parse()).unwrap_or_else(|e| e);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
