fn main() {
    std::process::exit(kuroda::cli::run(std::env::args_os()));
}
