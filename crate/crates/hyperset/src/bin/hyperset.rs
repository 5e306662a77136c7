fn main() {
    std::process::exit(hyperset::cli::run());
}
