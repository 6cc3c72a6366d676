//! Streams one representative per isomorphism class with its automorphism
//! group order, then checks that `Σ n!/|Aut|` gives the labeled count.
//!
//! ```text
//! cargo run --release --example emit_representatives -- 3
//! ```

use std::io::{self, BufWriter, Write};

use ucsgen::{enumerate, Family, UniverseContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(3);
    let ctx = UniverseContext::new(n)?;
    let mut out = BufWriter::new(io::stdout().lock());
    let mut labeled = 0u128;

    let classes = enumerate(
        &ctx,
        |f: &Family, aut: u64| {
            labeled += (ctx.factorial() / aut) as u128;
            let sets: Vec<String> = f
                .members()
                .iter()
                .map(|m| {
                    format!(
                        "{{{}}}",
                        m.elements()
                            .map(|e| e.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                })
                .collect();
            let _ = writeln!(
                out,
                "{:<24} |Aut| = {aut:<4} {}",
                f.to_string(),
                sets.join(" ")
            );
        },
        None,
    );
    out.flush()?;
    println!("{classes} classes, {labeled} labeled union-closed families on {n} elements");
    Ok(())
}
