use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use rackinv::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if out
                .write_all(report.text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(report.code as u8)
        }
        Err(e) => {
            eprintln!("rackinv: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
