use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use rsl::cli::{configure_threads, first_line, run, Cli};
use rsl::Error;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            eprintln!("rsl: {}", first_line(&e));
            return ExitCode::from(2);
        }
    };
    match configure_threads().and_then(|()| run(&cli)) {
        Ok(()) => {}
        // downstream closed early, as with `| head`
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
        Err(e) => {
            eprintln!("rsl: error: {e}");
            return ExitCode::FAILURE;
        }
    }
    ExitCode::SUCCESS
}
