fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut stdout = std::io::stdout().lock();
    let code = twoarm::cli::run(args, &mut stdout);
    std::process::exit(code);
}
