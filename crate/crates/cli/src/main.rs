use std::process::ExitCode;

use clap::Parser;
use golod::{load_session, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = load_session(&cli.flags).and_then(|s| run(&s, &cli.command, &cli.flags));
    match result {
        Ok(report) => {
            if cli.flags.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("JSON value serializes")
                );
            } else {
                println!("{}", report.text);
            }
            ExitCode::from(report.outcome.exit_code() as u8)
        }
        Err(e) => {
            if cli.flags.json {
                println!("{}", serde_json::json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
