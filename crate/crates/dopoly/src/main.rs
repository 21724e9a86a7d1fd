fn main() {
    std::process::exit(dopoly::cli::run(std::env::args_os()));
}
