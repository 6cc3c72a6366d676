//! Constructive enumeration of union-closed sets and Moore families.
//!
//! Union-closed families on `{1..n}` (always containing the universe and the
//! empty set) are generated one representative per isomorphism class with
//! Read/Faradžev style orderly generation. Canonicity is decided by
//! lexicographic minimality of the member string, and the permutations that
//! need to be tried are restricted to the stabilizer of the part of the
//! family that is already fixed.
//!
//! From the representatives and their automorphism group orders the crate
//! derives labeled counts, Moore family counts and sparse counts.
//!
//! ```
//! use ucsgen::{count_with_automorphisms, UniverseContext};
//!
//! let ctx = UniverseContext::new(4).unwrap();
//! let (classes, labeled) = count_with_automorphisms(&ctx);
//! assert_eq!(classes, 165);
//! assert_eq!(labeled.to_string(), "2271");
//! ```

pub mod canon;
pub mod cli;
pub mod counts;
pub mod enumerate;
mod error;
pub mod family;
pub mod subsets;

pub use canon::{canonical_form, canonical_step, compare_image, is_canonical_naive};
pub use counts::{
    complement_family, counts_report, emit_report, moore_from_ucs, report_table, sparse_count,
    CountsReport, ReportFormat,
};
pub use enumerate::{
    count_with_automorphisms, enumerate, CountingVisitor, Enumerator, RunStats, SplitSpec, Visitor,
};
pub use error::{Error, Result};
pub use family::{brute_force_closed, Family, SparsenessReport};
pub use subsets::{
    apply_perm, encode, order_less, Permutation, SubsetMask, UniverseContext, MAX_N,
};
