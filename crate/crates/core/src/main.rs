use std::io::Write;
use std::process::ExitCode;

use singular_braid::cli::run_cli;

fn main() -> ExitCode {
    let out = run_cli(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.status as u8)
}
