fn main() {
    std::process::exit(nilcascade::cli::run(std::env::args_os()));
}
