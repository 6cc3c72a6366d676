//! Union-closed families with O(1) membership and an incrementally
//! maintained set of minimal members.

use std::fmt;

use crate::error::{Error, Result};
use crate::subsets::{check_universe, order_less, SubsetMask, LEVEL_BITS, SUPERSET_BITS};

/// A union-closed family on `{1..n}` containing the universe and the empty
/// set.
///
/// `members` lists the non-empty members in increasing subset order, so the
/// universe comes first and the most recently added set is last. The empty
/// set is implicit. `reduced` is the bitmap of minimal non-empty members;
/// it is enough to test closure when a new, larger set is added.
#[derive(Clone, Debug)]
pub struct Family {
    n: usize,
    members: Vec<SubsetMask>,
    membership: u128,
    reduced: u128,
    undo: Vec<u128>,
    total_cardinality: u64,
}

/// Average member size, the empty set excluded, compared against `n / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SparsenessReport {
    pub total_element_count: u64,
    pub nonempty_set_count: u64,
    pub is_sparse: bool,
}

impl Family {
    /// `{Ω_n, ∅}`, the root of the search.
    pub fn base(n: usize) -> Result<Family> {
        check_universe(n)?;
        let full = SubsetMask::full(n);
        let mut members = Vec::with_capacity(1 << n);
        members.push(full);
        Ok(Family {
            n,
            members,
            membership: SubsetMask::EMPTY.bit() | full.bit(),
            reduced: full.bit(),
            undo: Vec::with_capacity(1 << n),
            total_cardinality: n as u64,
        })
    }

    /// Builds a family from arbitrary masks (the empty set may be omitted).
    /// Fails unless the masks together with `∅` and `Ω_n` form exactly a
    /// union-closed family, i.e. `Ω_n` must be present.
    pub fn from_masks(n: usize, masks: &[SubsetMask]) -> Result<Family> {
        check_universe(n)?;
        let full = SubsetMask::full(n);
        let mut members: Vec<SubsetMask> =
            masks.iter().copied().filter(|m| !m.is_empty()).collect();
        if let Some(bad) = members.iter().find(|m| !m.is_subset_of(full)) {
            return Err(Error::InvalidFamily(format!(
                "{bad:x} is not a subset of {{1..{n}}}"
            )));
        }
        members.sort_by(|a, b| a.order_cmp(*b));
        members.dedup();
        if members.first() != Some(&full) {
            return Err(Error::InvalidFamily("the universe is not a member".into()));
        }
        if !brute_force_closed(&members) {
            return Err(Error::InvalidFamily("not closed under union".into()));
        }
        let membership = members
            .iter()
            .fold(SubsetMask::EMPTY.bit(), |acc, m| acc | m.bit());
        let total_cardinality = members.iter().map(|m| m.cardinality() as u64).sum();
        let mut family = Family {
            n,
            members,
            membership,
            reduced: 0,
            undo: Vec::new(),
            total_cardinality,
        };
        family.reduced = family
            .recompute_reduced()
            .iter()
            .fold(0, |acc, m| acc | m.bit());
        Ok(family)
    }

    /// Parses the comma-separated hex form written by `Display`.
    pub fn parse(line: &str) -> Result<Family> {
        let masks = line
            .trim()
            .split(',')
            .map(|s| {
                u8::from_str_radix(s.trim(), 16)
                    .map(SubsetMask)
                    .map_err(|e| Error::Parse(format!("`{s}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let first = masks.first().copied().unwrap_or_default();
        let n = first.cardinality() as usize;
        if first != SubsetMask::full(n.max(1)) {
            return Err(Error::Parse(format!(
                "`{line}` does not start with the universe"
            )));
        }
        Self::from_masks(n, &masks)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Non-empty members in increasing subset order.
    #[inline]
    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    /// Number of non-empty members.
    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Always false: the universe is a member.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Number of sets added to the root `{Ω_n, ∅}`.
    #[inline]
    pub fn depth(&self) -> usize {
        self.members.len() - 1
    }

    /// The largest non-empty member in subset order (the last one added).
    #[inline]
    pub fn largest(&self) -> SubsetMask {
        *self.members.last().expect("universe is always present")
    }

    /// Bit `m` set iff mask `m` is a member; bit 0 (empty set) is always set.
    #[inline]
    pub fn membership_bits(&self) -> u128 {
        self.membership
    }

    #[inline]
    pub fn contains(&self, m: SubsetMask) -> bool {
        self.membership & m.bit() != 0
    }

    /// All members including the empty set, in increasing subset order.
    pub fn all_masks(&self) -> Vec<SubsetMask> {
        let mut out = self.members.clone();
        out.push(SubsetMask::EMPTY);
        out
    }

    /// The maintained minimal members, in increasing numeric order.
    pub fn reduced(&self) -> Vec<SubsetMask> {
        bit_masks(self.reduced).collect()
    }

    /// Minimal non-empty members computed from scratch.
    pub fn recompute_reduced(&self) -> Vec<SubsetMask> {
        let mut out: Vec<SubsetMask> = self
            .members
            .iter()
            .copied()
            .filter(|&a| !self.members.iter().any(|&b| b != a && b.is_subset_of(a)))
            .collect();
        out.sort();
        out
    }

    /// Members of cardinality `size`, as a bitmap over masks.
    #[inline]
    pub(crate) fn level_bits(&self, size: u32) -> u128 {
        self.membership & LEVEL_BITS[size as usize]
    }

    /// Whether `self ∪ {a}` is union-closed, for `a` larger than every
    /// member. Only the minimal members need to be checked.
    #[inline]
    pub fn can_extend(&self, a: SubsetMask) -> bool {
        debug_assert!(!a.is_empty() && a != SubsetMask::full(self.n));
        debug_assert!(order_less(self.largest(), a), "{a} does not extend {self}");
        let mut rest = self.reduced;
        while rest != 0 {
            let b = rest.trailing_zeros() as u8;
            if self.membership & SubsetMask(a.0 | b).bit() == 0 {
                return false;
            }
            rest &= rest - 1;
        }
        true
    }

    /// Adds `a`, which must pass [`can_extend`](Self::can_extend).
    /// Undo with [`retract`](Self::retract).
    #[inline]
    pub fn extend(&mut self, a: SubsetMask) {
        debug_assert!(self.can_extend(a));
        self.undo.push(self.reduced);
        self.reduced = (self.reduced & !SUPERSET_BITS[a.index()]) | a.bit();
        self.membership |= a.bit();
        self.total_cardinality += a.cardinality() as u64;
        self.members.push(a);
    }

    /// Removes the most recently added set, restoring the previous state
    /// exactly.
    #[inline]
    pub fn retract(&mut self) {
        let a = self
            .members
            .pop()
            .expect("retract on a family without additions");
        debug_assert!(!self.members.is_empty());
        self.membership &= !a.bit();
        self.total_cardinality -= a.cardinality() as u64;
        self.reduced = self.undo.pop().expect("undo log out of sync");
    }

    pub fn sparseness(&self) -> SparsenessReport {
        let total = self.total_cardinality;
        debug_assert_eq!(
            total,
            self.members
                .iter()
                .map(|m| m.cardinality() as u64)
                .sum::<u64>()
        );
        let count = self.members.len() as u64;
        SparsenessReport {
            total_element_count: total,
            nonempty_set_count: count,
            is_sparse: 2 * total <= self.n as u64 * count,
        }
    }
}

impl PartialEq for Family {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.members == other.members
    }
}

impl Eq for Family {}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m:x}")?;
        }
        Ok(())
    }
}

pub(crate) fn bit_masks(mut bits: u128) -> impl Iterator<Item = SubsetMask> {
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let m = bits.trailing_zeros() as u8;
            bits &= bits - 1;
            Some(SubsetMask(m))
        }
    })
}

/// `A ∪ B` is in the set for every pair of its members.
pub fn brute_force_closed(masks: &[SubsetMask]) -> bool {
    let present = masks.iter().fold(0u128, |acc, m| acc | m.bit());
    masks
        .iter()
        .all(|a| masks.iter().all(|b| present & a.union(*b).bit() != 0))
}
