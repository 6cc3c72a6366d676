//! Orderly generation of union-closed families.
//!
//! Every union-closed family other than `{Ω_n, ∅}` arises from a smaller
//! one by adding a set larger (in subset order) than all its non-empty
//! members, so the search starts at `{Ω_n, ∅}` and keeps adding sets in
//! increasing order. Canonical families are the only ones extended, and
//! every canonical family is visited exactly once.
//!
//! The permutations tried for a new member of cardinality `m` are those
//! fixing all members of cardinality above `m`. Each node keeps two
//! groups: the one it was accepted with (valid for further sets of the
//! same cardinality) and its automorphism group (valid for smaller sets).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::canon::{canonical_step_count, canonical_step_into};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::subsets::UniverseContext;

/// Receives every canonical family together with the order of its
/// automorphism group.
pub trait Visitor {
    fn visit(&mut self, family: &Family, automorphisms: u64);
}

impl<F: FnMut(&Family, u64)> Visitor for F {
    #[inline]
    fn visit(&mut self, family: &Family, automorphisms: u64) {
        self(family, automorphisms)
    }
}

/// Selects one shard of the search tree.
///
/// Children created at `depth` (number of sets added to the root) are
/// numbered in search order; this shard keeps those whose number is
/// congruent to `residue` modulo `modulus`, together with their subtrees.
/// Nodes above `depth` are traversed by every shard but reported only by
/// residue 0, so the shards of one `(modulus, depth)` partition the output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitSpec {
    modulus: u64,
    residue: u64,
    depth: usize,
}

impl SplitSpec {
    pub const DEFAULT_DEPTH: usize = 2;

    pub fn new(modulus: u64, residue: u64, depth: usize) -> Result<SplitSpec> {
        if modulus == 0 || residue >= modulus || depth == 0 {
            return Err(Error::InvalidSplit(format!("{modulus}/{residue}/{depth}")));
        }
        Ok(SplitSpec {
            modulus,
            residue,
            depth,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn depth(&self) -> usize {
        self.depth
    }
}

impl FromStr for SplitSpec {
    type Err = Error;

    /// `MOD/RES/DEPTH`, or `MOD/RES` with the default depth.
    fn from_str(s: &str) -> Result<SplitSpec> {
        let bad = || Error::InvalidSplit(s.to_string());
        let parts: Vec<&str> = s.split('/').collect();
        if !(2..=3).contains(&parts.len()) {
            return Err(bad());
        }
        let modulus = parts[0].trim().parse().map_err(|_| bad())?;
        let residue = parts[1].trim().parse().map_err(|_| bad())?;
        let depth = match parts.get(2) {
            Some(d) => d.trim().parse().map_err(|_| bad())?,
            None => Self::DEFAULT_DEPTH,
        };
        SplitSpec::new(modulus, residue, depth).map_err(|_| bad())
    }
}

impl fmt::Display for SplitSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.modulus, self.residue, self.depth)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Region {
    /// Above the split depth: traversed by every shard.
    Shared,
    /// Inside a subtree that belongs to this shard.
    Owned,
}

struct Walker<'a, V> {
    ctx: &'a UniverseContext,
    family: Family,
    visitor: V,
    split: Option<SplitSpec>,
    split_counter: u64,
    visited: u64,
}

impl<V: Visitor> Walker<'_, V> {
    /// Region of a new child at `depth`, or `None` if it belongs to
    /// another shard.
    #[inline]
    fn admit(&mut self, depth: usize, parent: Region) -> Option<Region> {
        match (parent, self.split) {
            (Region::Owned, _) | (_, None) => Some(Region::Owned),
            (Region::Shared, Some(split)) => {
                if depth < split.depth {
                    return Some(Region::Shared);
                }
                let number = self.split_counter;
                self.split_counter += 1;
                (number % split.modulus == split.residue).then_some(Region::Owned)
            }
        }
    }

    #[inline]
    fn visit(&mut self, region: Region, automorphisms: u64) {
        let report = match region {
            Region::Owned => true,
            Region::Shared => self.split.is_none_or(|s| s.residue == 0),
        };
        if report {
            self.visited += 1;
            self.visitor.visit(&self.family, automorphisms);
        }
    }

    /// Extends the current family. `groups[depth]` is its automorphism
    /// group and `groups[level]` the group it was accepted with.
    fn descend(
        &mut self,
        groups: &mut [Vec<u16>],
        depth: usize,
        level: usize,
        region: Region,
        singleton_fast_path: bool,
    ) {
        let ctx = self.ctx;
        let order = ctx.order();
        let last = self.family.largest();
        let last_size = last.cardinality();
        let first = ctx.rank(last) + 1;
        for (index, &a) in order.iter().enumerate().skip(first) {
            let size = a.cardinality();
            let group = if size == last_size { level } else { depth };
            if size == 1 && singleton_fast_path {
                self.singletons(&groups[group], depth, index, region);
                return;
            }
            if !self.family.can_extend(a) {
                continue;
            }
            let Some(child_region) = self.admit(depth + 1, region) else {
                continue;
            };
            self.family.extend(a);
            let (head, tail) = groups.split_at_mut(depth + 1);
            if canonical_step_into(ctx, &self.family, &head[group], &mut tail[0]) {
                let automorphisms = tail[0].len() as u64;
                self.visit(child_region, automorphisms);
                self.descend(groups, depth + 1, group, child_region, singleton_fast_path);
            }
            self.family.retract();
        }
    }

    /// Adds singletons only. Nothing smaller can follow, so the accepting
    /// group never changes and automorphisms are counted, not stored.
    fn singletons(&mut self, group: &[u16], depth: usize, start: usize, region: Region) {
        let ctx = self.ctx;
        let order = ctx.order();
        for &a in &order[start..] {
            debug_assert_eq!(a.cardinality(), 1);
            if !self.family.can_extend(a) {
                continue;
            }
            let Some(child_region) = self.admit(depth + 1, region) else {
                continue;
            };
            self.family.extend(a);
            if let Some(automorphisms) = canonical_step_count(ctx, &self.family, group) {
                self.visit(child_region, automorphisms);
                let next = ctx.rank(a) + 1;
                self.singletons(group, depth + 1, next, child_region);
            }
            self.family.retract();
        }
    }
}

/// What a run did, besides visiting.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    /// Families passed to the visitor.
    pub visited: u64,
    /// Children numbered at the split depth (the residues that can own
    /// anything are those below this number). Zero without a split.
    pub split_points: u64,
}

/// Configurable driver for the search.
pub struct Enumerator<'a, V> {
    ctx: &'a UniverseContext,
    visitor: V,
    split: Option<SplitSpec>,
    singleton_fast_path: bool,
}

impl<'a, V: Visitor> Enumerator<'a, V> {
    pub fn new(ctx: &'a UniverseContext, visitor: V) -> Self {
        Enumerator {
            ctx,
            visitor,
            split: None,
            singleton_fast_path: true,
        }
    }

    pub fn split(mut self, split: Option<SplitSpec>) -> Self {
        self.split = split;
        self
    }

    /// Use the specialised singleton recursion (on by default).
    pub fn singleton_fast_path(mut self, enabled: bool) -> Self {
        self.singleton_fast_path = enabled;
        self
    }

    /// Runs the search, returning its statistics and the visitor.
    pub fn run(self) -> (RunStats, V) {
        let ctx = self.ctx;
        let n = ctx.n();
        let mut walker = Walker {
            ctx,
            family: Family::base(n).expect("context has a valid universe size"),
            visitor: self.visitor,
            split: self.split,
            split_counter: 0,
            visited: 0,
        };
        let mut groups = vec![Vec::new(); 1 << n];
        groups[0] = ctx.full_group();
        let root = if walker.split.is_some() {
            Region::Shared
        } else {
            Region::Owned
        };
        walker.visit(root, ctx.factorial());
        walker.descend(&mut groups, 0, 0, root, self.singleton_fast_path);
        let stats = RunStats {
            visited: walker.visited,
            split_points: walker.split_counter,
        };
        (stats, walker.visitor)
    }
}

/// Visits one representative of every isomorphism class of union-closed
/// families on `{1..n}` (or of one shard of them) and returns how many
/// were visited.
pub fn enumerate<V: Visitor>(ctx: &UniverseContext, visitor: V, split: Option<SplitSpec>) -> u64 {
    Enumerator::new(ctx, visitor).split(split).run().0.visited
}

/// Runs only the singleton stage below `family`, whose singleton
/// candidates are tested against `group`. `family` itself is not visited.
/// Returns the number of visited descendants.
pub fn enumerate_singleton_phase<V: Visitor>(
    ctx: &UniverseContext,
    family: &Family,
    group: &[u16],
    visitor: V,
) -> u64 {
    let last = family.largest();
    let start = if last.cardinality() == 1 {
        ctx.rank(last) + 1
    } else {
        ctx.order().len() - ctx.n()
    };
    let mut walker = Walker {
        ctx,
        family: family.clone(),
        visitor,
        split: None,
        split_counter: 0,
        visited: 0,
    };
    walker.singletons(group, family.depth(), start, Region::Owned);
    walker.visited
}

/// Tallies classes, labeled families (`n! / |Aut|` per class) and sparse
/// classes.
#[derive(Clone, Debug, Default)]
pub struct CountingVisitor {
    factorial: u64,
    pub classes: u64,
    pub labeled: u128,
    pub sparse: u64,
}

impl CountingVisitor {
    pub fn new(ctx: &UniverseContext) -> Self {
        CountingVisitor {
            factorial: ctx.factorial(),
            ..Default::default()
        }
    }

    pub fn labeled_big(&self) -> BigUint {
        BigUint::from(self.labeled)
    }
}

impl Visitor for CountingVisitor {
    #[inline]
    fn visit(&mut self, family: &Family, automorphisms: u64) {
        debug_assert_eq!(self.factorial % automorphisms, 0);
        self.classes += 1;
        self.labeled += (self.factorial / automorphisms) as u128;
        if family.sparseness().is_sparse {
            self.sparse += 1;
        }
    }
}

/// Number of classes and of labeled union-closed families on `{1..n}`.
pub fn count_with_automorphisms(ctx: &UniverseContext) -> (u64, BigUint) {
    let (_, counter) = Enumerator::new(ctx, CountingVisitor::new(ctx)).run();
    (counter.classes, counter.labeled_big())
}
