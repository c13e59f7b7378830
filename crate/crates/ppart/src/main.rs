use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ppart::cli::{
    cmd_expand, cmd_matrices, cmd_paper_examples, cmd_poset, cmd_verify, CliError, CliLimits,
    OutputFormat,
};

/// Exact arithmetic for quasisymmetric functions via weighted P-partitions.
#[derive(Parser)]
#[command(name = "ppart", version, about)]
struct Cli {
    /// Output format: plain, json or latex
    #[arg(long, global = true, default_value = "plain")]
    format: String,

    /// Degree cap for expansions
    #[arg(long, global = true, default_value_t = 7)]
    max_degree: u32,

    /// Element cap for poset enumeration
    #[arg(long, global = true, default_value_t = 10)]
    max_elements: usize,

    /// Variable count for truncations (defaults to the total weight)
    #[arg(long, global = true)]
    vars: Option<u32>,

    /// Reserved; all computation is deterministic
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a basis element (m, f, p or pr) into the M or F basis
    Expand {
        /// Source basis tag: m, f, p or pr
        basis_from: String,
        /// Composition, e.g. `1,2,1` (the empty composition is `e`)
        index: String,
        /// Target basis: M or F
        #[arg(long)]
        to: String,
    },
    /// Run a verification suite exhaustively up to a degree bound
    Verify {
        /// One of: fundamental-lemma, product, coproduct, involutions,
        /// matrices, refinement, all
        suite: String,
        /// Degree (or poset size) bound
        degree: u32,
    },
    /// List the filling matrices for a pair of compositions
    Matrices {
        /// Matrix kind: R, Rsym or Q
        kind: String,
        /// First composition (a partition for Rsym)
        alpha: String,
        /// Second composition (a partition for Rsym)
        beta: String,
    },
    /// Enumerate over a poset file: extensions, lowersets, kpartitions,
    /// ktruncate
    Poset {
        /// One of: extensions, lowersets, kpartitions, ktruncate
        action: String,
        /// Poset file in the `elements:`/`covers:`/`dualized:` text format
        file: PathBuf,
    },
    /// Replay the built-in worked examples and check them exactly
    PaperExamples,
}

fn run(cli: Cli) -> Result<(String, i32), CliError> {
    let format = OutputFormat::parse(&cli.format)
        .ok_or_else(|| CliError::Usage(format!("unknown format `{}`", cli.format)))?;
    let limits = CliLimits {
        max_degree: cli.max_degree,
        max_poset_elements: cli.max_elements,
        vars: cli.vars,
    };
    let out = match cli.command {
        Command::Expand {
            basis_from,
            index,
            to,
        } => cmd_expand(&basis_from, &index, &to, format, limits)?,
        Command::Verify { suite, degree } => cmd_verify(&suite, degree, format)?,
        Command::Matrices { kind, alpha, beta } => cmd_matrices(&kind, &alpha, &beta, format)?,
        Command::Poset { action, file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", file.display())))?;
            cmd_poset(&action, &text, format, limits)?
        }
        Command::PaperExamples => cmd_paper_examples(format)?,
    };
    Ok((out.stdout, out.exit_code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((stdout, code)) => {
            print!("{stdout}");
            ExitCode::from(code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
