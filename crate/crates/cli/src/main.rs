use std::process::ExitCode;

use clap::{CommandFactory, Parser};
use serde_json::json;

use instanton_chains_cli::{config_argv, render_regress, render_table, run, Cli, Output};

fn usage_error(msg: &str) -> ExitCode {
    let mut cmd = Cli::command();
    let _ = cmd.error(clap::error::ErrorKind::InvalidValue, msg).print();
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let mut cli = Cli::parse();
    if let Some(path) = cli.config.clone() {
        if cli.command.is_some() {
            return usage_error("--config cannot be combined with a subcommand");
        }
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) => return usage_error(&format!("cannot read {}: {e}", path.display())),
        };
        let argv = match config_argv(&text, cli.json) {
            Ok(a) => a,
            Err(e) => return usage_error(&format!("{}: {e}", path.display())),
        };
        cli = match Cli::try_parse_from(argv) {
            Ok(c) => c,
            Err(e) => e.exit(),
        };
    }
    let Some(command) = cli.command else {
        return usage_error("a subcommand or --config is required");
    };

    match run(&command) {
        Ok(Output::Record(record)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&record).expect("record serializes"));
            } else {
                print!("{}", render_table(&record));
            }
            ExitCode::SUCCESS
        }
        Ok(Output::Regress(report)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", render_regress(&report));
            }
            if report.failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({"error": e.name(), "message": e.to_string()}));
            } else {
                eprintln!("error[{}]: {e}", e.name());
            }
            ExitCode::FAILURE
        }
    }
}
