fn main() {
    std::process::exit(sympart::cli::main_entry());
}
