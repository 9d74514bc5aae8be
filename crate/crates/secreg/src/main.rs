fn main() {
    std::process::exit(secreg::cli::run(std::env::args_os()));
}
