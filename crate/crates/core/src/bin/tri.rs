use std::io::Write;

use clap::Parser;
use triangulant::cli::{run, Cli, CliReport};

fn main() {
    let report = match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return;
        }
        Err(e) => {
            eprint!("{e}");
            CliReport::usage_error(e.to_string())
        }
    };
    let text = serde_json::to_string_pretty(&report).expect("serializable report");
    // a closed stdout (for example `tri ... | head`) is not an error worth a panic
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    std::process::exit(report.status.exit_code());
}
