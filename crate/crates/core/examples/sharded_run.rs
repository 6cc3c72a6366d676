//! Splits one universe into shards, runs them on separate threads and
//! merges the per-shard reports; the merge equals the unsplit report.
//!
//! ```text
//! cargo run --release --example sharded_run -- 6 16
//! ```
//! arguments: `n shards [depth]`

use std::thread;

use ucsgen::counts::{counts_report, CountsReport};
use ucsgen::{emit_report, ReportFormat, SplitSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let n = args.first().copied().unwrap_or(5) as usize;
    let shards = args.get(1).copied().unwrap_or(8);
    let depth = args
        .get(2)
        .copied()
        .unwrap_or(SplitSpec::DEFAULT_DEPTH as u64) as usize;

    let reports = thread::scope(|scope| {
        let handles: Vec<_> = (0..shards)
            .map(|residue| {
                scope.spawn(move || {
                    let split = SplitSpec::new(shards, residue, depth)?;
                    counts_report(n, Some(split))
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("shard panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;

    for (residue, r) in reports.iter().enumerate() {
        println!("shard {residue}/{shards}: {} classes", r.ucs_classes);
    }
    let merged = CountsReport::merge(&reports)?;
    print!("{}", emit_report(&[merged], ReportFormat::Text));
    Ok(())
}
