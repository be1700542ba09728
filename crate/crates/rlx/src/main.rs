fn main() {
    std::process::exit(rlx::cli::main());
}
