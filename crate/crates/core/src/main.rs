use clap::Parser;

fn main() {
    let cli = tricat::cli::Cli::parse();
    let out = tricat::cli::run(&cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
