mod args;
mod caps;
mod commands;
mod graph_file;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use setmap::Caps;

use args::Cli;
use commands::CliError;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors by itself
    let cli = Cli::parse();

    let mut caps = Caps::default();
    match caps::apply_overrides(&mut caps, &cli.caps) {
        Ok(warnings) => warnings.iter().for_each(|w| eprintln!("{w}")),
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    }

    match commands::run(&cli.command, &caps) {
        Ok(report) => {
            let out = report.render(cli.format);
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(EXIT_USAGE);
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILED)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Cap(msg)) => {
            eprintln!("error: {msg} (raise it with --cap)");
            ExitCode::from(EXIT_CAP)
        }
    }
}
