fn main() {
    std::process::exit(circsep::cli::run(std::env::args_os()));
}
