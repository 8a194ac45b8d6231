use clap::Parser;
use unitdist::cli::{run, Cli};

fn main() {
    std::process::exit(run(&Cli::parse()));
}
