use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(arithdyn::cli::run(std::env::args_os()))
}
