//! `twisted-lab`: experiments and reports over the finite-group centralizer
//! laboratory.
//!
//! Exit codes: 0 on success with every asserted invariant green, 1 on usage
//! or budget errors, 2 when a run completes but an asserted invariant fails
//! (the failing row is named on stderr).

mod commands;
mod output;

use clap::error::ErrorKind;
use clap::Parser;

use commands::Cli;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not usage errors
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    match commands::run(cli) {
        Ok(outcome) => std::process::exit(outcome.exit_code()),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
