fn main() {
    std::process::exit(bdanchors::run(std::env::args_os()));
}
