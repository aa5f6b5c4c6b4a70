use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use invseq_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: cannot configure {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let command_line = std::env::args().collect::<Vec<_>>().join(" ");
    let report = match run(&cli, command_line) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if let Err(e) = report.write_table(&mut out, cli.global.format).and_then(|_| out.flush()) {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(2);
    }
    let _ = report.write_summary(io::stderr().lock());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
