use std::io::Write;

fn main() {
    let outcome = batchcode::cli::run_args(std::env::args_os());
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.status);
}
