fn main() {
    std::process::exit(hanoi_groups::cli::main_with_args(std::env::args_os()));
}
