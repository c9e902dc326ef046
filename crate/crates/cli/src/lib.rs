//! Command-line driver for `shpf-core`: expansions, counting tables,
//! enumerations, class functions and the verification suites, with JSON,
//! CSV or text output and an optional on-disk cache.

pub mod cache;
pub mod commands;
pub mod config;
mod error;
pub mod json;

pub use commands::{execute, Output};
pub use config::{Cli, RunConfig};
pub use error::CliError;

use clap::Parser;

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code together with what should go to stdout and stderr.
pub fn run_args<I, T>(args: I) -> (u8, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    let result = RunConfig::try_from(cli).and_then(|cfg| {
        let output = execute(&cfg)?;
        let stdout = if cfg.out.is_some() { String::new() } else { output.body };
        Ok((output.success, stdout))
    });
    match result {
        Ok((true, stdout)) => (0, stdout, String::new()),
        Ok((false, stdout)) => (1, stdout, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}
