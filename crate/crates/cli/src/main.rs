use std::io::Write;
use std::process::ExitCode;

use cli::{parse_args, run, CliError};

fn fail(e: &CliError) -> ExitCode {
    eprintln!("webcalc: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let inv = match parse_args(std::env::args_os()) {
        Ok(inv) => inv,
        Err(Ok(e)) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
        Err(Err(e)) => return fail(&e),
    };
    let config = inv.config;
    if inv.dump_config {
        println!("{}", serde_json::to_string_pretty(&config).expect("config serializes"));
        return ExitCode::SUCCESS;
    }
    let out = match run(&config) {
        Ok(out) => out,
        Err(e) => return fail(&e),
    };
    let body = out.rendered(&config);
    let written = match &config.output {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        return fail(&CliError::Io(e));
    }
    ExitCode::from(out.exit_code() as u8)
}
