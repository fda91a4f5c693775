use std::process::ExitCode;

use clap::Parser;
use peakforge::cli::{run, Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    let json = serde_json::to_string_pretty(&report.to_json()).expect("serializable");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, format!("{}\n", json)) {
            eprintln!("error: cannot write {}: {}", path.display(), e);
            return ExitCode::from(2);
        }
    }
    match cli.format {
        Format::Json => println!("{}", json),
        Format::Table => print!("{}", report.text),
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        if cli.format == Format::Table {
            eprintln!("{}", json);
        }
        ExitCode::from(1)
    }
}
