fn main() {
    std::process::exit(hk_core::runner::main_with_args(std::env::args_os()));
}
