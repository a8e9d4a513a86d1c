use clap::Parser;

use symdca_cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let report = execute(&cli);
    if let Some(err) = &report.error {
        eprintln!("error: {err}");
    }
    print!("{}", report.render());
    std::process::exit(report.exit_code);
}
