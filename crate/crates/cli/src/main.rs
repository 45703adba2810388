mod input;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::report::Failure;

/// Kauffman bracket ideals of genus-1 tangles.
///
/// INPUT is a catalog name (krebes_A, tangle_D, tangle_H, fig6_complement),
/// a path to a diagram file, or `-` for standard input. The state sum bounds
/// can be raised with KBIDEAL_MAX_FRONTIER and KBIDEAL_MAX_CROSSINGS.
#[derive(Debug, Parser)]
#[command(name = "kbideal", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Kauffman bracket of a link diagram.
    Bracket { input: String },
    /// Reduce a tangle to the crossingless annular basis.
    Reduce { input: String },
    /// Graph basis coefficients of a tangle.
    Coeffs {
        input: String,
        /// Largest colour allowed in the graph basis.
        #[arg(long, default_value_t = kbideal_core::pairing::DEFAULT_MAX_I)]
        max_i: u32,
    },
    /// Bracket ideal of a tangle and whether it is trivial.
    Ideal {
        input: String,
        #[arg(long, value_enum, default_value_t = Parity::Full)]
        parity: Parity,
    },
    /// Determinant of a link diagram.
    Det { input: String },
    /// Close a tangle by a generated complementary piece.
    Closure {
        input: String,
        /// Signed number of passes through the hole.
        #[arg(long, allow_hyphen_values = true)]
        winding: i32,
        /// Signed number of half twists of the two legs.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twists: i32,
        /// Signed number of kinks.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        curls: i32,
    },
    /// Run the regression suite over the catalog.
    Verify {
        /// Run only these checks (1 to 9).
        #[arg(long = "check")]
        checks: Vec<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Parity {
    Even,
    Odd,
    Full,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match report::run(&cli.command, cli.json) {
        Ok(code) => code,
        Err(Failure { kind, message }) => {
            eprintln!("error ({kind}): {message}");
            ExitCode::FAILURE
        }
    }
}
