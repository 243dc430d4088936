use clap::Parser;
use vtchroma::cli;

fn main() {
    let args = cli::Cli::parse();
    std::process::exit(cli::run(args));
}
