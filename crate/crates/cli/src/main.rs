use clap::Parser;
use qiso_cli::{run, Format, Params, SuiteConfig};
use std::process::ExitCode;

fn main() -> ExitCode {
    let cfg = SuiteConfig::parse();
    let params = match Params::resolve(&cfg) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("qiso: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match run(&params) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("qiso: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match cfg.format {
        Format::Json => report.to_json_string(),
        Format::Text => report.to_text(),
    };
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("qiso: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
