use std::process::ExitCode;

use clap::Parser;
use f2f_formation::cli::{run, Cli, EXIT_ERROR, EXIT_OK};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // clap reports usage errors as 2, which is reserved for cycles
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { EXIT_OK } as u8);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
