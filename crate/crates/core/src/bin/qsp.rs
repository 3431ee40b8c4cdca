use std::process::ExitCode;

use clap::Parser;
use qsp_fpi::cli::{run, Cli};

fn main() -> ExitCode {
    run(Cli::parse())
}
