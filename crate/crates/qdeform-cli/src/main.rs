use clap::Parser;

fn main() {
    let cli = qdeform_cli::config::Cli::parse();
    std::process::exit(qdeform_cli::run(&cli));
}
