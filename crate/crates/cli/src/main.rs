mod commands;
mod input;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "thinwidth", version, about = "Width, bridge number and trunk of knots and braid-pattern satellites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
pub struct SatelliteArgs {
    /// Catalog name or path to a .morse file
    companion: String,
    /// Path to a .braid file, or the braid inline (`index 2; s+ 1`)
    #[arg(long)]
    braid: String,
    /// Full twists added to the pattern
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    framing: i32,
    /// Which companion minimum (0-based) receives the pattern
    #[arg(long, default_value_t = 0)]
    site: usize,
    /// Accept a companion with a single maximum
    #[arg(long)]
    allow_trivial: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a .morse file describes a single knot
    Validate {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Width, bridge number, trunk, thick/thin levels and bound checks
    Invariants {
        /// Path to a .morse file or a catalog name
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Cable a companion with a braid pattern
    Satellite {
        #[command(flatten)]
        spec: SatelliteArgs,
        /// Write the satellite word here
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the canonical torus foliation here
        #[arg(long)]
        fol: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Level-by-level connectivity graphs of the companion torus
    Sweep {
        #[command(flatten)]
        spec: SatelliteArgs,
        /// Write one dot graph per level into this directory
        #[arg(long)]
        dot_dir: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Anneal a presentation towards smaller width
    Search {
        /// Path to a .morse file or a catalog name
        input: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        iters: u64,
        #[arg(long, default_value_t = 1)]
        chains: usize,
        /// Winding number, if the input is a satellite over a nontrivial companion
        #[arg(long)]
        winding: Option<usize>,
        /// Write the best word here instead of printing it
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the accepted-move log here
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Bundled knot words
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List {
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Err(e) = thinwidth::catalog::self_check() {
        eprintln!("error: {e}");
        return ExitCode::from(4);
    }
    let result = match cli.command {
        Command::Validate { input, json } => commands::validate(&input, json),
        Command::Invariants { input, json } => commands::invariants(&input, json),
        Command::Satellite { spec, out, fol, json } => commands::satellite(&spec, out.as_deref(), fol.as_deref(), json),
        Command::Sweep { spec, dot_dir, json } => commands::sweep(&spec, dot_dir.as_deref(), json),
        Command::Search { input, seed, iters, chains, winding, out, trace, json } => {
            let opts = commands::SearchOptions { seed, iters, chains, winding };
            commands::search(&input, &opts, out.as_deref(), trace.as_deref(), json)
        }
        Command::Catalog { action: CatalogAction::List { json } } => commands::catalog_list(json),
    };
    match result {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
