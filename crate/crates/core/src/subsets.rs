//! Subset encoding, the total order on subsets and permutation actions.
//!
//! A subset `A` of `{1..n}` is the integer with bit `i` set iff `i + 1 ∈ A`.
//! Subsets are ordered by cardinality first, where a *larger* cardinality
//! means a *smaller* set, and then by the numeric value of the encoding.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Largest supported universe.
pub const MAX_N: usize = 7;

/// A subset of `{1..n}` stored as an `n`-bit mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(pub u8);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// The full universe `{1..n}`.
    #[inline]
    pub fn full(n: usize) -> SubsetMask {
        SubsetMask(((1u16 << n) - 1) as u8)
    }

    #[inline]
    pub fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, element: usize) -> bool {
        (1..=8).contains(&element) && self.0 & (1 << (element - 1)) != 0
    }

    #[inline]
    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    /// Complement within `{1..n}`.
    #[inline]
    pub fn complement(self, n: usize) -> SubsetMask {
        SubsetMask(!self.0 & SubsetMask::full(n).0)
    }

    /// Elements of the set, 1-based and increasing.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..8).filter(move |i| bits & (1 << i) != 0).map(|i| i + 1)
    }

    /// Position of this mask in the family bitmaps.
    #[inline]
    pub(crate) fn bit(self) -> u128 {
        1u128 << self.0
    }

    /// Compares in the subset order (more elements sort first).
    #[inline]
    pub fn order_cmp(self, other: SubsetMask) -> Ordering {
        other
            .cardinality()
            .cmp(&self.cardinality())
            .then(self.0.cmp(&other.0))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl fmt::LowerHex for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

/// Encodes a set of elements of `{1..n}` as a mask.
pub fn encode<I: IntoIterator<Item = usize>>(elements: I, n: usize) -> Result<SubsetMask> {
    check_universe(n)?;
    let mut bits = 0u8;
    for element in elements {
        if element == 0 || element > n {
            return Err(Error::ElementOutOfRange { element, n });
        }
        bits |= 1 << (element - 1);
    }
    Ok(SubsetMask(bits))
}

/// `a < b` in the subset order: `|a| > |b|`, or equal sizes and `b(a) < b(b)`.
#[inline]
pub fn order_less(a: SubsetMask, b: SubsetMask) -> bool {
    a.order_cmp(b) == Ordering::Less
}

pub(crate) fn check_universe(n: usize) -> Result<()> {
    if (1..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::UniverseSize(n))
    }
}

/// Bitmaps (over all 128 masks) of the masks with a given cardinality.
pub(crate) const LEVEL_BITS: [u128; 9] = level_bits();

/// `SUPERSET_BITS[a]` has bit `m` set iff `m ⊇ a`, for all masks below 128.
pub(crate) const SUPERSET_BITS: [u128; 128] = superset_bits();

const fn level_bits() -> [u128; 9] {
    let mut out = [0u128; 9];
    let mut m = 0;
    while m < 128 {
        out[(m as u8).count_ones() as usize] |= 1u128 << m;
        m += 1;
    }
    out
}

const fn superset_bits() -> [u128; 128] {
    let mut out = [0u128; 128];
    let mut a = 0;
    while a < 128 {
        let mut m = 0;
        while m < 128 {
            if m & a == a {
                out[a] |= 1u128 << m;
            }
            m += 1;
        }
        a += 1;
    }
    out
}

/// A bijection of `{1..n}` together with its action on all `2^n` masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<u8>,
    action: Box<[SubsetMask]>,
}

impl Permutation {
    /// Builds a permutation from the 1-based images of `1..=n`.
    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        let n = images.len();
        check_universe(n)?;
        let mut seen = [false; MAX_N];
        for &image in images {
            if image == 0 || image > n {
                return Err(Error::ElementOutOfRange { element: image, n });
            }
            if seen[image - 1] {
                return Err(Error::Parse(format!("{images:?} is not a bijection")));
            }
            seen[image - 1] = true;
        }
        let zero_based: Vec<u8> = images.iter().map(|&i| (i - 1) as u8).collect();
        Ok(Self::from_zero_based(zero_based))
    }

    fn from_zero_based(images: Vec<u8>) -> Permutation {
        let n = images.len();
        let action = (0..1usize << n)
            .map(|m| {
                let mut out = 0u8;
                for (i, &img) in images.iter().enumerate() {
                    if m & (1 << i) != 0 {
                        out |= 1 << img;
                    }
                }
                SubsetMask(out)
            })
            .collect();
        Permutation { images, action }
    }

    pub fn identity(n: usize) -> Permutation {
        Self::from_zero_based((0..n as u8).collect())
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based element `e`.
    pub fn image(&self, e: usize) -> usize {
        self.images[e - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &img)| i == img as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        let images = other
            .images
            .iter()
            .map(|&i| self.images[i as usize])
            .collect();
        Self::from_zero_based(images)
    }

    /// Image of a mask via the precomputed table.
    #[inline]
    pub fn apply(&self, m: SubsetMask) -> SubsetMask {
        self.action[m.index()]
    }

    /// Image of a mask computed element by element, without the table.
    pub fn relabel(&self, m: SubsetMask) -> SubsetMask {
        SubsetMask(
            m.elements()
                .map(|e| 1u8 << (self.image(e) - 1))
                .fold(0, |acc, b| acc | b),
        )
    }
}

/// `{p(e) : e ∈ m}`.
#[inline]
pub fn apply_perm(p: &Permutation, m: SubsetMask) -> SubsetMask {
    p.apply(m)
}

/// Everything that depends only on the universe size: all `n!`
/// permutations with their action tables and the order of candidate sets.
#[derive(Debug)]
pub struct UniverseContext {
    n: usize,
    perms: Vec<Permutation>,
    order: Vec<SubsetMask>,
    rank: Vec<u8>,
}

impl UniverseContext {
    pub fn new(n: usize) -> Result<UniverseContext> {
        check_universe(n)?;
        // Lexicographic generation puts the identity first.
        let perms: Vec<Permutation> = (0..n as u8)
            .permutations(n)
            .map(Permutation::from_zero_based)
            .collect();
        debug_assert!(perms[0].is_identity());

        let full = SubsetMask::full(n);
        let mut order: Vec<SubsetMask> = (1..=full.0).map(SubsetMask).collect();
        order.sort_by(|a, b| a.order_cmp(*b));
        debug_assert_eq!(order[0], full);

        let mut rank = vec![u8::MAX; 1 << n];
        for (i, m) in order.iter().enumerate() {
            rank[m.index()] = i as u8;
        }
        Ok(UniverseContext {
            n,
            perms,
            order,
            rank,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    /// All `n!` permutations; index 0 is the identity.
    #[inline]
    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }

    #[inline]
    pub fn perm(&self, index: u16) -> &Permutation {
        &self.perms[index as usize]
    }

    /// Non-empty subsets in increasing order, starting with the universe.
    #[inline]
    pub fn order(&self) -> &[SubsetMask] {
        &self.order
    }

    /// Position of a non-empty mask in [`order`](Self::order).
    #[inline]
    pub fn rank(&self, m: SubsetMask) -> usize {
        self.rank[m.index()] as usize
    }

    /// `n!`
    pub fn factorial(&self) -> u64 {
        self.perms.len() as u64
    }

    /// Indices of every permutation, the starting group of the search.
    pub fn full_group(&self) -> Vec<u16> {
        (0..self.perms.len() as u16).collect()
    }
}
