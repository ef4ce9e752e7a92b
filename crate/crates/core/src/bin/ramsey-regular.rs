use std::process::ExitCode;

fn main() -> ExitCode {
    ramsey_regular::harness::cli::main()
}
