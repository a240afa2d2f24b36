use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(gsm_cli::run(std::env::args_os()))
}
