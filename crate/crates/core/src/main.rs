fn main() {
    std::process::exit(mmv::cli::run(std::env::args_os()));
}
