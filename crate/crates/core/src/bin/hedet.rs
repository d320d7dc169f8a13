fn main() {
    std::process::exit(hedet::cli::run());
}
