//! Lists the sparse representatives: average member size (empty set
//! excluded) at most `n / 2`.
//!
//! ```text
//! cargo run --release --example sparse_filter -- 5
//! ```

use ucsgen::{enumerate, Family, UniverseContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(5);
    let ctx = UniverseContext::new(n)?;
    let mut sparse = 0;
    enumerate(
        &ctx,
        |f: &Family, _| {
            let s = f.sparseness();
            if s.is_sparse {
                sparse += 1;
                println!(
                    "{:<40} {} elements in {} sets",
                    f.to_string(),
                    s.total_element_count,
                    s.nonempty_set_count
                );
            }
        },
        None,
    );
    println!("{sparse} sparse classes on {n} elements");
    Ok(())
}
