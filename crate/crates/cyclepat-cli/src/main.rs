fn main() {
    std::process::exit(cyclepat_cli::run());
}
