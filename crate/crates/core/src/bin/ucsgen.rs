use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use ucsgen::cli::{run, Mode, RunConfig};
use ucsgen::{ReportFormat, SplitSpec};

/// Enumerate non-isomorphic union-closed sets and Moore families.
#[derive(Parser, Debug)]
#[command(name = "ucsgen", version)]
struct Args {
    /// Universe size (1..=7).
    #[arg(long)]
    n: usize,
    /// count | emit-reps | report
    #[arg(long, default_value = "count")]
    mode: Mode,
    /// Prefix each emitted representative with |Aut| and a tab.
    #[arg(long)]
    labeled: bool,
    /// Emit Moore family representatives.
    #[arg(long)]
    moore: bool,
    /// Emit sparse representatives only.
    #[arg(long)]
    sparse_only: bool,
    /// Run one shard: MOD/RES/DEPTH (DEPTH defaults to 2).
    #[arg(long)]
    split: Option<SplitSpec>,
    /// Report format: tsv | text
    #[arg(long, default_value = "tsv")]
    format: ReportFormat,
    /// Write to a file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = RunConfig {
        n: args.n,
        mode: args.mode,
        labeled: args.labeled,
        moore: args.moore,
        sparse_only: args.sparse_only,
        split: args.split,
        format: args.format,
        output: args.output,
    };
    match run(&config) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ucsgen: {e}");
            ExitCode::from(2)
        }
    }
}
