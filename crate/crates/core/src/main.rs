use clap::Parser;

fn main() {
    std::process::exit(ldomain::cli::main_with(ldomain::cli::Cli::parse()));
}
