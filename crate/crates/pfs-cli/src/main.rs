use clap::Parser;

use pfs_cli::commands::{run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            e.report();
            std::process::exit(e.exit_code());
        }
    }
}
