fn main() {
    std::process::exit(ramanujan_euler::cli::run());
}
