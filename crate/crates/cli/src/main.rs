mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "transversals",
    version,
    about = "Coset enumeration and generating transversals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Presentation file (`generators:`, `relators:`, `subgroup:` lines).
    #[arg(short = 'p', long = "presentation")]
    presentation: PathBuf,
    /// Upper bound on cosets defined during enumeration.
    #[arg(long, default_value_t = 1_000_000)]
    max_cosets: usize,
}

#[derive(Args, Debug, Clone)]
struct WithTuple {
    #[command(flatten)]
    common: Common,
    /// Comma-separated generating tuple; defaults to the generators.
    #[arg(long)]
    tuple: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the coset table of the subgroup.
    Enumerate(Common),
    /// Left transversal containing a Nielsen-equivalent tuple.
    Transversal(WithTuple),
    /// Left-right transversal containing a Nielsen-equivalent tuple (at most 3 entries).
    LrTransversal(WithTuple),
    /// Chessboard blocks of the subgroup against a second subgroup.
    Chessboard {
        #[command(flatten)]
        common: Common,
        /// Presentation file whose subgroup is used as K (defaults to H).
        #[arg(long)]
        second_subgroup: Option<PathBuf>,
    },
    /// Look for primitive elements in the subgroup, optionally in every coset.
    PrimitiveScan {
        #[command(flatten)]
        args: WithTuple,
        /// Also find a primitive element in every left coset.
        #[arg(long)]
        cosets: bool,
    },
    /// Brute-force checks on the finite group.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Order of the group.
    Order(Common),
    /// Elements lying in some generating tuple of the given size.
    Primitives {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'n')]
        n: usize,
        /// Sample random tuples with this seed instead of searching exhaustively.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 10_000, requires = "seed")]
        samples: usize,
    },
    /// Every subgroup with generator words.
    Subgroups(Common),
    /// Check a file of words as a left/right transversal of the subgroup.
    VerifyTransversal {
        #[command(flatten)]
        common: Common,
        file: PathBuf,
    },
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(commands::EXIT_PARSE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
