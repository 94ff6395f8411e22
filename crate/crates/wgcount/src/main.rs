fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let outcome = wgcount::cli::run(&argv);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
