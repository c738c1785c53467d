fn main() {
    std::process::exit(hgpoly::cli::main_with_args(std::env::args_os()));
}
