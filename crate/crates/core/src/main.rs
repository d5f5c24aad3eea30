fn main() -> std::process::ExitCode {
    bcpc::cli::main()
}
