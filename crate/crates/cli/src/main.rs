fn main() {
    std::process::exit(antimagic_cli::run_cli(std::env::args_os()));
}
