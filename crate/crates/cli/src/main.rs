use clap::Parser;

fn main() {
    let cli = tubepoly::Cli::parse();
    std::process::exit(tubepoly::execute(&cli));
}
