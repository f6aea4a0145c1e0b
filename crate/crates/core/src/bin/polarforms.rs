fn main() -> std::process::ExitCode {
    polarforms::cli::main_from_env()
}
