//! Inspects a single family given in the serialized form (hex masks, the
//! universe first): closure, canonicity, automorphisms and its canonical
//! relabeling.
//!
//! ```text
//! cargo run --example canonicity_check -- 7,6,5
//! ```

use ucsgen::canon::{automorphism_count_naive, canonical_form};
use ucsgen::{is_canonical_naive, Family, UniverseContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let line = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "7,6,5".to_string());
    let family = Family::parse(&line)?;
    let ctx = UniverseContext::new(family.n())?;

    let canonical: Vec<String> = canonical_form(&ctx, &family.all_masks())
        .iter()
        .filter(|m| !m.is_empty())
        .map(|m| format!("{m:x}"))
        .collect();
    println!("family         {family}");
    println!(
        "minimal sets   {:?}",
        family
            .reduced()
            .iter()
            .map(|m| format!("{m:x}"))
            .collect::<Vec<_>>()
    );
    println!("canonical      {}", is_canonical_naive(&ctx, &family));
    println!("canonical form {}", canonical.join(","));
    println!("|Aut|          {}", automorphism_count_naive(&ctx, &family));
    println!("sparse         {}", family.sparseness().is_sparse);
    Ok(())
}
