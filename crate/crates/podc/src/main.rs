fn main() {
    std::process::exit(podc::cli::run());
}
