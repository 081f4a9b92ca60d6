use std::process::ExitCode;

use clap::Parser;
use freelnd_cli::commands::{run, Command, Format};

/// Exact computations with locally nilpotent derivations of K<X,Y>.
#[derive(Debug, Parser)]
#[command(name = "freelnd", version)]
struct Cli {
    /// Output style
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Structured => println!("{}", out.structured),
            }
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
