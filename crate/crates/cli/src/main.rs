use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hecke_cli::commands::{dispatch, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match dispatch(&cli) {
        Ok(resp) => {
            let _ = std::io::stdout().write_all(resp.stdout.as_bytes());
            ExitCode::from(resp.status)
        }
        Err(e) => {
            eprintln!("hecke: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
