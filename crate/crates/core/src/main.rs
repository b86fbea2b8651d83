use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use plucker::cli::{run, Args, EXIT_OTHER};

fn main() -> ExitCode {
    let req = Args::parse().into_request();
    let out = run(&req);
    let written = match &req.out {
        Some(path) => std::fs::write(path, &out.body),
        None => std::io::stdout().write_all(out.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_OTHER as u8);
    }
    ExitCode::from(out.code as u8)
}
