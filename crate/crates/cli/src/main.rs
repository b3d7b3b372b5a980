mod args;
mod commands;
mod corpus;
mod load;
mod render;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use qdl_core::qcat::DEFAULT_ENUMERATION_CAP;
use serde::Serialize;
use serde_json::Value;

use crate::args::Cli;

/// What every invocation prints. Reports are deterministic unless
/// `--timing` is given.
#[derive(Serialize)]
struct RunReport {
    command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorReport>,
    exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<f64>,
}

#[derive(Serialize)]
struct ErrorReport {
    kind: String,
    message: String,
}

fn error_report(err: &anyhow::Error) -> ErrorReport {
    let kind = err
        .chain()
        .find_map(|e| e.downcast_ref::<qdl_core::Error>())
        .map(|e| e.kind())
        .unwrap_or("input");
    ErrorReport {
        kind: kind.to_string(),
        message: format!("{err:#}"),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let cap = cli.cap.unwrap_or(DEFAULT_ENUMERATION_CAP);

    let start = Instant::now();
    let outcome = commands::dispatch(&cli.command, cap);
    let timing_ms = cli.timing.then(|| start.elapsed().as_secs_f64() * 1000.0);

    let report = match outcome {
        Ok(o) => RunReport {
            command,
            result: Some(o.result),
            error: None,
            exit_code: o.exit_code,
            timing_ms,
        },
        Err(e) => {
            eprintln!("error: {e:#}");
            RunReport {
                command,
                result: None,
                error: Some(error_report(&e)),
                exit_code: 2,
                timing_ms,
            }
        }
    };
    let value = serde_json::to_value(&report).expect("report serializes");
    if cli.plain {
        print!("{}", render::plain(&value));
    } else {
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("report serializes")
        );
    }
    ExitCode::from(report.exit_code as u8)
}
