fn main() {
    std::process::exit(dcls::cli::run());
}
