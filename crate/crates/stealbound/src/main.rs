use std::process::ExitCode;

fn main() -> ExitCode {
    stealbound::cli::main()
}
