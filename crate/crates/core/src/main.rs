use std::process::ExitCode;

fn main() -> ExitCode {
    sdcodes::cli::main()
}
