fn main() {
    std::process::exit(nodalgen::cli::run(std::env::args_os()));
}
