//! `fractal`: census, excluded-minor and boundary-ratio tools for sparse paving
//! matroids and spike minors.

mod args;
mod run;

use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run::configure_threads().and_then(|()| run::dispatch(cli.command)) {
        Ok(code) => ExitCode::from(code),
        Err(fail) => {
            eprintln!("{}", fail.to_json());
            ExitCode::from(fail.exit_code())
        }
    }
}
