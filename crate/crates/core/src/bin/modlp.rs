fn main() {
    std::process::exit(modlp::cli::run());
}
