fn main() {
    std::process::exit(vtop::cli::main_with_args(std::env::args_os()));
}
