fn main() {
    std::process::exit(quiverhom::cli::main());
}
