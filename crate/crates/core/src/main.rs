fn main() {
    std::process::exit(a6_hurwitz::cli::run(std::env::args_os()));
}
