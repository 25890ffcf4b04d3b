fn main() {
    std::process::exit(wittlab::cli::run(std::env::args_os()));
}
