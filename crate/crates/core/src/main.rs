fn main() {
    let code = vknot_core::cli::run(std::env::args_os());
    std::process::exit(code);
}
