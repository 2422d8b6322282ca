fn main() {
    let code = dialtop::cli::main_with_args(std::env::args());
    std::process::exit(code);
}
