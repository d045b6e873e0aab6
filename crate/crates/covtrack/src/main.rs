use std::process::ExitCode;

use clap::Parser;
use covtrack::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("covtrack: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
