use std::process::ExitCode;

use clap::Parser;

use hopfpi_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error[INVALID_ARGUMENT]: cannot configure {threads} threads: {e}");
            return ExitCode::from(10);
        }
    }
    let (stdout, error) = match run(&cli) {
        Ok(outcome) => (outcome.stdout, outcome.error),
        Err(e) => (String::new(), Some(e)),
    };
    print!("{stdout}");
    match error {
        None => ExitCode::SUCCESS,
        Some(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
