fn main() {
    std::process::exit(miebound::cli::run());
}
