fn main() {
    std::process::exit(gdet::cli::main());
}
