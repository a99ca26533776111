fn main() {
    std::process::exit(rational_kit::cli::main());
}
