use std::process::ExitCode;

fn main() -> ExitCode {
    polar_legendre::cli::run()
}
