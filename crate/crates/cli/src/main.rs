use std::process::ExitCode;

use clap::Parser;
use jostzeta_cli::{run, Cli, RunSpec};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = RunSpec::from_cli(cli).and_then(|spec| {
        eprintln!("run spec: {}", spec.to_json());
        run(&spec)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
