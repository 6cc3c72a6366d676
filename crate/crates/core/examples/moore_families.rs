//! Moore families from union-closed families: complements of the members,
//! taken in the full universe, over every universe size up to `n`.
//!
//! ```text
//! cargo run --release --example moore_families -- 3
//! ```

use num_bigint::BigUint;
use ucsgen::counts::is_moore_family;
use ucsgen::{complement_family, enumerate, moore_from_ucs, Family, UniverseContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(3);

    let ctx = UniverseContext::new(n)?;
    println!("union-closed representative -> Moore family (n = {n})");
    enumerate(
        &ctx,
        |f: &Family, _| {
            let moore = complement_family(f);
            assert!(is_moore_family(&moore, n));
            let text: Vec<String> = moore.iter().map(|m| format!("{m:x}")).collect();
            println!("  {:<20} -> {}", f.to_string(), text.join(","));
        },
        None,
    );

    // Families on smaller universes contribute too, C(n, i) ways each.
    let mut classes = vec![1u64];
    let mut labeled = vec![BigUint::from(1u32)];
    for i in 1..=n {
        let (c, l) = ucsgen::count_with_automorphisms(&UniverseContext::new(i)?);
        classes.push(c);
        labeled.push(l);
    }
    let (moore_classes, moore_labeled) = moore_from_ucs(&classes, &labeled)?;
    println!("{moore_classes} Moore families up to isomorphism, {moore_labeled} labeled");
    Ok(())
}
