use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use rainbow_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // clap reports --help and --version as errors too
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = run(cli);
    if let Some(payload) = &result.payload {
        let mut stdout = std::io::stdout().lock();
        // a closed pipe is the reader's choice, not an error of ours
        let text = serde_json::to_string_pretty(payload).expect("JSON values serialize");
        let _ = writeln!(stdout, "{text}");
    }
    for line in &result.diagnostics {
        eprintln!("rainbow: {line}");
    }
    ExitCode::from(result.code() as u8)
}
