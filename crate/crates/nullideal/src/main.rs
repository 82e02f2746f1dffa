fn main() {
    std::process::exit(nullideal::cli::main());
}
