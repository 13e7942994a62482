use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use tope_committee::cli::{self, Cli};
use tope_committee::{Error, Limits};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = e.downcast_ref::<Error>().map_or(1, Error::exit_code);
            ExitCode::from(code as u8)
        }
    }
}

fn execute(cli: &Cli) -> anyhow::Result<u8> {
    let outcome = cli::run(cli, &Limits::from_env())?;
    match &cli.output {
        Some(path) => std::fs::write(path, &outcome.text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout()
            .write_all(outcome.text.as_bytes())
            .context("writing standard output")?,
    }
    Ok(outcome.code as u8)
}
