//! Machine-readable command-line front end for the `qdeform` library.
//!
//! Five subcommands, each emitting CSV (default) or JSON rows to stdout or a
//! file:
//!
//! - `basic` — bracket-number tables, symbolic and numeric
//! - `identity` — the exact operator-identity suite, pass/fail per identity
//! - `fock` — ladder-relation residual reports
//! - `evolve` — per-element Heisenberg-picture time series
//! - `limit` — classical-limit scans
//!
//! Exit codes: 0 when every check passed, 1 when a mathematical check
//! failed, 2 on usage or domain errors.

pub mod commands;
pub mod config;
pub mod output;
pub mod suite;

use config::Cli;

/// Runs a parsed invocation end to end and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let common = cli.command.common();
    match commands::execute(&cli.command) {
        Ok(out) => {
            let write_result = match &common.output {
                Some(path) => std::fs::write(path, &out.body),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(out.body.as_bytes())
                }
            };
            if let Err(e) = write_result {
                eprintln!("error: {e}");
                return 2;
            }
            if out.failed {
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
