fn main() {
    std::process::exit(takiff_lab::cli::run(std::env::args_os()));
}
