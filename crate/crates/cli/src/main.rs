use std::process::ExitCode;

use bell_fourier_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bellf: {e}");
            e.exit_code()
        }
    }
}
