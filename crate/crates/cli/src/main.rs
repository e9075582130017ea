use std::process::ExitCode;

use clap::Parser;

mod args;
mod plot;
mod run;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match run::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
