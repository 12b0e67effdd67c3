mod args;
mod cache;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use run::{Failure, Output};

fn configure_threads(threads: Option<usize>) -> Result<(), Failure> {
    match threads {
        Some(0) => Err(Failure::Usage("--threads must be positive".into())),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Other(e.to_string())),
        None => Ok(()),
    }
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    let common = match &cli.command {
        Command::Betti(a) => &a.common,
        Command::Compare(c) | Command::Properties(c) | Command::Isocheck(c) => c,
    };
    configure_threads(common.threads)?;
    match &cli.command {
        Command::Betti(a) => run::betti(a),
        Command::Compare(c) => run::compare(c),
        Command::Properties(c) => run::properties(c),
        Command::Isocheck(c) => run::isocheck(c),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            match out.mismatch {
                Some(why) => {
                    eprintln!("circbetti: {why}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(f) => {
            eprintln!("circbetti: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
