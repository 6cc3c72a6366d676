//! Prints the class, labeled, Moore and sparse counts for universes 1..=N.
//!
//! ```text
//! cargo run --release --example count_table -- 5
//! ```

use std::time::Instant;

use ucsgen::{counts::report_table, emit_report, ReportFormat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(5);
    let start = Instant::now();
    let table = report_table(n)?;
    print!("{}", emit_report(&table, ReportFormat::Text));
    eprintln!("elapsed: {:.2?}", start.elapsed());
    Ok(())
}
