fn main() {
    let code = hyperspec::cli::run(std::env::args_os());
    std::process::exit(code);
}
