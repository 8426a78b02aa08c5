fn main() {
    std::process::exit(polyco::cli::run(std::env::args_os()));
}
