fn main() {
    std::process::exit(borderbasis::cli::main_with_args(std::env::args_os()));
}
