fn main() {
    std::process::exit(rectflow_cli::run_command(std::env::args_os()));
}
