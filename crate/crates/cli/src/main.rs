use std::io::{self, Write};
use std::process::ExitCode;

use primefree_cli::{parse_args, run, RunError, EXIT_RUNTIME, EXIT_USAGE};

fn main() -> ExitCode {
    let plan = match parse_args(std::env::args_os()) {
        Ok(plan) => plan,
        Err(e) => {
            if e.code == 0 {
                print!("{}", e.message);
            } else {
                eprint!("{}", e.message);
                if !e.message.ends_with('\n') {
                    eprintln!();
                }
            }
            return ExitCode::from(e.code as u8);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(&plan, &mut out) {
        Ok(code) => code,
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(RunError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            EXIT_RUNTIME
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
