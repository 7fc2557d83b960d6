fn main() {
    let (code, out) = frobrep::cli::run(std::env::args_os());
    println!("{out}");
    std::process::exit(code);
}
