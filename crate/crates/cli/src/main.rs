//! `hyperexp`: one binary, one subcommand per library operation.
//!
//! Exit codes: 0 success, 1 usage error (unknown or missing subcommand),
//! 2 invalid input, 3 budget exhausted (the partial result is still
//! printed), 4 internal consistency failure.

mod cli;
mod input;
mod render;
mod run;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use cli::Cli;

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                ErrorKind::InvalidSubcommand
                | ErrorKind::MissingSubcommand
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 1,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let name = args.command.name();
    match run::run(&args.command, &args.global) {
        Ok(out) => {
            if args.global.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.value).expect("JSON values serialise")
                );
            } else {
                print!("{}", render::render(name, &out.value));
            }
            if out.budget_exhausted {
                eprintln!("{name}: budget exhausted, result is not exact");
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("{name}: {e}");
            match e {
                hyperexp::Error::Internal(_) => ExitCode::from(4),
                _ => ExitCode::from(2),
            }
        }
    }
}
