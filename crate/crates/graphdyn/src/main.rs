use std::process::ExitCode;

fn main() -> ExitCode {
    graphdyn::cli::run(std::env::args_os())
}
