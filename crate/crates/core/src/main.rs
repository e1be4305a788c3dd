fn main() {
    std::process::exit(closure_kit::cli::run_cli(std::env::args_os()));
}
