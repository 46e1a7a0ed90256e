use std::process::ExitCode;

use clap::Parser;
use equicover::cli::{run, Caps, RunConfig, EXIT_INPUT};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let caps = match Caps::from_env() {
        Ok(caps) => caps,
        Err(e) => {
            eprintln!("equicover: EQUICOVER_CAPS: {e}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let (code, report) = run(&config, &caps);
    match &config.report {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &report) {
                eprintln!("equicover: {}: {e}", path.display());
                return ExitCode::from(EXIT_INPUT as u8);
            }
        }
        None => print!("{report}"),
    }
    ExitCode::from(code as u8)
}
