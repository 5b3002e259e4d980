fn main() {
    std::process::exit(sigma_words::cli::run(std::env::args_os()));
}
