//! Command-line front end for the sphere-bundle classification library.
//!
//! Library layout: [`args`] defines the interface, [`commands`] computes
//! typed results, [`render`] turns them into text, [`envelope`] wraps them
//! for JSON output, [`table`] builds the bulk survey, and [`error`] maps
//! failures to exit codes (0 success, 2 input error, 3 internal
//! consistency failure).

pub mod args;
pub mod commands;
pub mod envelope;
pub mod error;
pub mod render;
pub mod table;

use std::fs;
use std::io::{self, Write};

use clap::Parser;
use serde_json::json;

use args::{Cli, Command, ConvertDirection, Format, ModcountKind};
use envelope::OutputEnvelope;
use error::CliError;

/// Parses `std::env::args`, runs the command, prints the output, and
/// returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(stdout_text) => match writeln!(io::stdout(), "{stdout_text}") {
            Ok(()) => 0,
            // The reader went away (e.g. `s3bundle table 1 200 | head`);
            // exit quietly like any other filter.
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => 0,
            Err(e) => {
                let err = CliError::Io(format!("cannot write to stdout: {e}"));
                let _ = writeln!(io::stderr(), "error: {err}");
                err.exit_code()
            }
        },
        Err(err) => {
            let _ = writeln!(io::stderr(), "error: {err}");
            err.exit_code()
        }
    }
}

/// Whether a single-result command should emit JSON; rejects the
/// table-only formats.
fn wants_json(format: Format) -> Result<bool, CliError> {
    match format {
        Format::Text => Ok(false),
        Format::Json => Ok(true),
        Format::Csv | Format::Jsonl => Err(CliError::Input(
            "--format csv and jsonl apply only to `table`; use text or json".into(),
        )),
    }
}

fn envelope_line<T: serde::Serialize>(
    command: &str,
    inputs: serde_json::Value,
    result: &T,
    notes: &[&str],
) -> String {
    let payload = serde_json::to_value(result).expect("result serialization cannot fail");
    OutputEnvelope::new(command, inputs, payload, notes).to_json_line()
}

/// Runs one parsed command and returns exactly what should be printed to
/// stdout.
pub fn execute(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Invariants { m, n } => {
            let result = commands::invariants_result(m, n)?;
            Ok(if wants_json(cli.format)? {
                envelope_line(
                    "invariants",
                    json!({"m": m, "n": n}),
                    &result,
                    commands::NOTES_INVARIANTS,
                )
            } else {
                render::invariants_text(m, n, &result)
            })
        }
        Command::Compare {
            m,
            n,
            m_prime,
            n_prime,
        } => {
            let result = commands::compare_result(m, n, m_prime, n_prime)?;
            Ok(if wants_json(cli.format)? {
                envelope_line(
                    "compare",
                    json!({"m": m, "n": n, "m_prime": m_prime, "n_prime": n_prime}),
                    &result,
                    commands::NOTES_COMPARE,
                )
            } else {
                render::compare_text(m, n, m_prime, n_prime, &result)
            })
        }
        Command::Count { m, n, oracle } => {
            let result = commands::count_result(m, n, oracle)?;
            Ok(if wants_json(cli.format)? {
                envelope_line(
                    "count",
                    json!({"m": m, "n": n, "oracle": oracle}),
                    &result,
                    commands::NOTES_COUNT,
                )
            } else {
                render::count_text(m, n, &result)
            })
        }
        Command::Classes { n, level } => {
            let result = commands::classes_result(n, level.to_level(), cli.window)?;
            Ok(if wants_json(cli.format)? {
                envelope_line(
                    "classes",
                    json!({"n": n, "level": level.token(), "window": cli.window}),
                    &result,
                    commands::NOTES_CLASSES,
                )
            } else {
                render::classes_text(&result)
            })
        }
        Command::Table { n_min, n_max, out } => {
            let rows = table::table_rows(n_min, n_max)?;
            let content = match cli.format {
                Format::Text | Format::Csv => table::rows_to_csv(&rows),
                Format::Json | Format::Jsonl => table::rows_to_jsonl(&rows),
            };
            match out {
                Some(path) => {
                    fs::write(&path, format!("{content}\n")).map_err(|e| {
                        CliError::Io(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Ok(format!("wrote {} rows to {}", rows.len(), path.display()))
                }
                None => Ok(content),
            }
        }
        Command::Convert { direction } => match direction {
            ConvertDirection::ToMilnor { m, n } => {
                let result = commands::to_milnor_result(m, n)?;
                Ok(if wants_json(cli.format)? {
                    envelope_line(
                        "convert",
                        json!({"direction": "to_milnor", "m": m, "n": n}),
                        &result,
                        commands::NOTES_CONVERT,
                    )
                } else {
                    render::to_milnor_text(m, n, &result)
                })
            }
            ConvertDirection::FromMilnor { k, l } => {
                let result = commands::from_milnor_result(k, l)?;
                Ok(if wants_json(cli.format)? {
                    envelope_line(
                        "convert",
                        json!({"direction": "from_milnor", "k": k, "l": l}),
                        &result,
                        commands::NOTES_CONVERT,
                    )
                } else {
                    render::from_milnor_text(k, l, &result)
                })
            }
        },
        Command::Modcount { kind } => {
            let (result, notes, inputs) = match kind {
                ModcountKind::Squares { k } => (
                    commands::modcount_squares(k)?,
                    commands::NOTES_MODCOUNT_SQUARES,
                    json!({"kind": "squares", "k": k}),
                ),
                ModcountKind::Products { k } => (
                    commands::modcount_products(k)?,
                    commands::NOTES_MODCOUNT_PRODUCTS,
                    json!({"kind": "products", "k": k}),
                ),
            };
            Ok(if wants_json(cli.format)? {
                envelope_line("modcount", inputs, &result, notes)
            } else {
                render::modcount_text(&result)
            })
        }
    }
}
