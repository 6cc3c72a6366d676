//! Canonicity testing by lexicographic minimality of the member string.
//!
//! The string of a family is the list of its non-empty members in
//! increasing subset order. A family is canonical when no permutation of
//! the universe produces a smaller string. Permutations preserve
//! cardinality, so two strings of the same family under different
//! relabelings agree position by position on cardinality, and the first
//! differing position is found level by level: within a level the smaller
//! string is the one holding the smallest mask of the symmetric difference.

use std::cmp::Ordering;

use crate::family::Family;
use crate::subsets::{Permutation, SubsetMask, UniverseContext, LEVEL_BITS};

/// Compares two member bitmaps with equal per-cardinality counts as
/// strings, checking cardinalities from `n` down to `0`.
#[inline]
fn cmp_strings(image: u128, original: u128, n: usize) -> Ordering {
    let diff = image ^ original;
    if diff == 0 {
        return Ordering::Equal;
    }
    for size in (0..=n).rev() {
        let level_diff = diff & LEVEL_BITS[size];
        if level_diff != 0 {
            return first_difference(image, level_diff);
        }
    }
    unreachable!("bitmaps differ outside 0..=n")
}

#[inline]
fn first_difference(image: u128, diff: u128) -> Ordering {
    let lowest = diff & diff.wrapping_neg();
    if image & lowest != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

fn image_bits(p: &Permutation, masks: impl IntoIterator<Item = SubsetMask>) -> u128 {
    masks.into_iter().fold(0, |acc, m| acc | p.apply(m).bit())
}

/// Compares the string of `p(f)` with the string of `f`.
/// `Less` means the image is lexicographically smaller.
pub fn compare_image(p: &Permutation, f: &Family) -> Ordering {
    let image = image_bits(p, f.members().iter().copied()) | SubsetMask::EMPTY.bit();
    cmp_strings(image, f.membership_bits(), f.n())
}

/// Same comparison restricted to the members of the last cardinality
/// level, valid when `p` already fixes every larger member.
#[inline]
fn compare_last_level(p: &Permutation, level: &[SubsetMask], original: u128) -> Ordering {
    let mut image = 0u128;
    for &m in level {
        image |= p.apply(m).bit();
    }
    if image == original {
        Ordering::Equal
    } else {
        first_difference(image, image ^ original)
    }
}

/// Members sharing the cardinality of the last one, and their bitmap.
#[inline]
fn last_level(f: &Family) -> (&[SubsetMask], u128) {
    let members = f.members();
    let size = f.largest().cardinality();
    let start = members
        .iter()
        .rposition(|m| m.cardinality() != size)
        .map_or(0, |i| i + 1);
    (&members[start..], f.level_bits(size))
}

/// Canonicity test for a family whose last member `A` was just added to a
/// canonical parent.
///
/// `parent_group` must hold every permutation that fixes the members of
/// cardinality greater than `|A|`; only those can yield a smaller string.
/// On success the permutations of `parent_group` that fix `f` (the full
/// automorphism group) are written to `out`. Returns whether `f` is
/// canonical; `out` is unspecified otherwise.
pub fn canonical_step_into(
    ctx: &UniverseContext,
    f: &Family,
    parent_group: &[u16],
    out: &mut Vec<u16>,
) -> bool {
    out.clear();
    if parent_group.len() == 1 {
        debug_assert!(ctx.perm(parent_group[0]).is_identity());
        out.push(parent_group[0]);
        return true;
    }
    let (level, original) = last_level(f);
    for &index in parent_group {
        match compare_last_level(ctx.perm(index), level, original) {
            Ordering::Less => return false,
            Ordering::Equal => out.push(index),
            Ordering::Greater => {}
        }
    }
    true
}

/// Like [`canonical_step_into`] but only counts the automorphisms.
/// Returns `None` when `f` is not canonical.
#[inline]
pub fn canonical_step_count(
    ctx: &UniverseContext,
    f: &Family,
    parent_group: &[u16],
) -> Option<u64> {
    if parent_group.len() == 1 {
        return Some(1);
    }
    let (level, original) = last_level(f);
    let mut fixed = 0;
    for &index in parent_group {
        match compare_last_level(ctx.perm(index), level, original) {
            Ordering::Less => return None,
            Ordering::Equal => fixed += 1,
            Ordering::Greater => {}
        }
    }
    Some(fixed)
}

/// Allocating form of [`canonical_step_into`]: `Some(automorphisms)` when
/// canonical.
pub fn canonical_step(ctx: &UniverseContext, f: &Family, parent_group: &[u16]) -> Option<Vec<u16>> {
    let mut out = Vec::with_capacity(parent_group.len());
    canonical_step_into(ctx, f, parent_group, &mut out).then_some(out)
}

/// Tries all `n!` permutations.
pub fn is_canonical_naive(ctx: &UniverseContext, f: &Family) -> bool {
    ctx.permutations()
        .iter()
        .all(|p| compare_image(p, f) != Ordering::Less)
}

/// Number of permutations fixing `f`, by trying all of them.
pub fn automorphism_count_naive(ctx: &UniverseContext, f: &Family) -> u64 {
    ctx.permutations()
        .iter()
        .filter(|p| compare_image(p, f) == Ordering::Equal)
        .count() as u64
}

/// Lexicographically smallest relabeling of an arbitrary set of masks,
/// sorted in subset order. The empty set, if present, sorts last.
pub fn canonical_form(ctx: &UniverseContext, masks: &[SubsetMask]) -> Vec<SubsetMask> {
    let n = ctx.n();
    let best = ctx
        .permutations()
        .iter()
        .map(|p| image_bits(p, masks.iter().copied()))
        .min_by(|a, b| cmp_strings(*a, *b, n))
        .unwrap_or(0);
    let mut out: Vec<SubsetMask> = crate::family::bit_masks(best).collect();
    out.sort_by(|a, b| a.order_cmp(*b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(n: usize, v: &[u8]) -> Family {
        let masks: Vec<SubsetMask> = v.iter().copied().map(SubsetMask).collect();
        Family::from_masks(n, &masks).unwrap()
    }

    #[test]
    fn compare_image_examples() {
        let f = family(3, &[7, 3, 5]);
        assert_eq!(
            compare_image(&Permutation::identity(3), &f),
            Ordering::Equal
        );

        let g = family(2, &[0b11, 0b10]);
        let swap = Permutation::from_images(&[2, 1]).unwrap();
        assert_eq!(compare_image(&swap, &g), Ordering::Less);

        // (2 3) maps {1,2} to {1,3}: (7, 5) against (7, 3)
        let h = family(3, &[0b111, 0b011]);
        let p = Permutation::from_images(&[1, 3, 2]).unwrap();
        assert_eq!(compare_image(&p, &h), Ordering::Greater);
    }

    #[test]
    fn canonical_step_examples() {
        for n in 1..=4 {
            let ctx = UniverseContext::new(n).unwrap();
            let all = ctx.full_group();
            let group = canonical_step(&ctx, &Family::base(n).unwrap(), &all).unwrap();
            assert_eq!(group, all);
        }

        let ctx = UniverseContext::new(2).unwrap();
        let all = ctx.full_group();
        assert!(canonical_step(&ctx, &family(2, &[0b11, 0b10]), &all).is_none());
        let group = canonical_step(&ctx, &family(2, &[0b11, 0b01]), &all).unwrap();
        assert_eq!(group.len(), 1);
        assert!(ctx.perm(group[0]).is_identity());
        assert_eq!(
            canonical_step_count(&ctx, &family(2, &[0b11, 0b01]), &all),
            Some(1)
        );
        assert_eq!(
            canonical_step_count(&ctx, &family(2, &[0b11, 0b10]), &all),
            None
        );
    }

    #[test]
    fn trivial_group_short_circuits() {
        let ctx = UniverseContext::new(2).unwrap();
        // not canonical, but with only the identity to try nothing is checked
        assert_eq!(
            canonical_step(&ctx, &family(2, &[0b11, 0b10]), &[0]),
            Some(vec![0])
        );
    }

    #[test]
    fn naive_examples() {
        for n in 1..=4 {
            let ctx = UniverseContext::new(n).unwrap();
            assert!(is_canonical_naive(&ctx, &Family::base(n).unwrap()));
        }
        let ctx = UniverseContext::new(2).unwrap();
        assert!(!is_canonical_naive(&ctx, &family(2, &[0b11, 0b10])));
        assert!(is_canonical_naive(&ctx, &family(2, &[0b11, 0b01])));
        assert_eq!(
            automorphism_count_naive(&ctx, &family(2, &[0b11, 0b01, 0b10])),
            2
        );
    }

    #[test]
    fn compare_image_matches_sorted_strings() {
        // brute force: sort the image and compare vectors
        let ctx = UniverseContext::new(3).unwrap();
        let f = family(3, &[0b111, 0b110, 0b011, 0b010]);
        for p in ctx.permutations() {
            let mut image: Vec<SubsetMask> = f.members().iter().map(|&m| p.apply(m)).collect();
            image.sort_by(|a, b| a.order_cmp(*b));
            let expected = image
                .iter()
                .map(|m| m.0)
                .cmp(f.members().iter().map(|m| m.0));
            assert_eq!(compare_image(p, &f), expected);
        }
    }

    #[test]
    fn canonical_form_picks_minimum() {
        let ctx = UniverseContext::new(3).unwrap();
        let masks: Vec<SubsetMask> = [7, 6, 0].into_iter().map(SubsetMask).collect();
        assert_eq!(
            canonical_form(&ctx, &masks),
            vec![SubsetMask(7), SubsetMask(3), SubsetMask(0)]
        );
    }
}
