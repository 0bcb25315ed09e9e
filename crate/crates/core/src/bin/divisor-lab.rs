fn main() {
    std::process::exit(divisor_lab::cli::run(std::env::args_os()));
}
