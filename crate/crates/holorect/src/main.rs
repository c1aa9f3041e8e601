fn main() {
    std::process::exit(holorect::cli::run(std::env::args_os()));
}
