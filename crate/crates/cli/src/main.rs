use std::io;
use std::process::ExitCode;

use clap::Parser;
use isosqueeze_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match isosqueeze_cli::run(&cli, &mut io::stdout().lock(), &mut io::stderr().lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
