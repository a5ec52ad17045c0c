use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use tmcv::{commands, Format};
use tmcv_core::{Kind, Weight};

#[derive(Parser)]
#[command(name = "tmcv", version, about = "Checks tilting-module criteria for small root systems")]
struct Cli {
    /// Data directory holding manifest.json.
    #[arg(long, global = true, env = "TMCV_DATA_DIR")]
    data_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load a data directory and run every oracle over it.
    Validate {
        /// Defaults to --data-dir.
        path: Option<PathBuf>,
    },
    /// Mechanized evidence for one (root system, prime) case.
    Report {
        #[arg(long = "type")]
        kind: Kind,
        #[arg(long)]
        prime: i64,
    },
    /// Weyl character, dimension and composition factors of ∇(λ).
    Chars {
        #[arg(long = "type")]
        kind: Kind,
        #[arg(long)]
        prime: i64,
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Weights of St_1 that could obstruct the good filtration.
    Scan {
        #[arg(long = "type")]
        kind: Kind,
        #[arg(long)]
        prime: i64,
    },
    /// G_1T composition factors of a baby Verma module.
    Babyverma {
        #[arg(long = "type", default_value = "G2")]
        kind: Kind,
        #[arg(long, default_value_t = 7)]
        prime: i64,
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Alcoves of the box of a special point (default −ρ).
    Alcoves {
        #[arg(long = "type")]
        kind: Kind,
        #[arg(long)]
        prime: i64,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<Weight>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let data_dir = cli.data_dir.unwrap_or_else(tmcv_core::bundle::default_data_dir);
    let out = match cli.command {
        Command::Validate { path } => commands::validate(&path.unwrap_or(data_dir), cli.format),
        Command::Report { kind, prime } => commands::report(kind, prime, &data_dir, cli.format),
        Command::Chars { kind, prime, weight } => commands::chars(kind, prime, weight, &data_dir, cli.format),
        Command::Scan { kind, prime } => commands::scan(kind, prime, cli.format),
        Command::Babyverma { kind, prime, weight } => commands::babyverma(kind, prime, weight, &data_dir, cli.format),
        Command::Alcoves { kind, prime, weight } => commands::alcoves(kind, prime, weight, &data_dir, cli.format),
    };
    match out {
        Ok(o) => {
            print!("{}", o.stdout);
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
