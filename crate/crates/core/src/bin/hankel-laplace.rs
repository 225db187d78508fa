fn main() {
    std::process::exit(hankel_laplace::cli::run(std::env::args_os()));
}
