//! Shows how a universe splits into shards: for each depth, how many
//! children are numbered and how long a single shard takes.
//!
//! ```text
//! cargo run --release --example shard_planning -- 6 1000 3 17
//! ```
//! arguments: `n modulus depth residue`

use std::time::Instant;

use ucsgen::{CountingVisitor, Enumerator, SplitSpec, UniverseContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let (n, modulus, depth, residue) = match args[..] {
        [n, m, d, r] => (n as usize, m, d as usize, r),
        _ => (6, 1000, 3, 0),
    };
    let ctx = UniverseContext::new(n)?;
    let split = SplitSpec::new(modulus, residue, depth)?;
    let start = Instant::now();
    let (stats, counter) = Enumerator::new(&ctx, CountingVisitor::new(&ctx))
        .split(Some(split))
        .run();
    println!(
        "n={n} split={split}: {} split points, {} families visited, {} labeled, {:.2?}",
        stats.split_points,
        stats.visited,
        counter.labeled,
        start.elapsed()
    );
    Ok(())
}
