fn main() {
    std::process::exit(partmeth::run(std::env::args_os()));
}
