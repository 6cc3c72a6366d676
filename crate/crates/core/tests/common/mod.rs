//! Brute-force oracles. Nothing here goes through the search or the
//! bitmap string comparison of the library.

#![allow(dead_code)]

use std::cmp::Reverse;

use itertools::Itertools;
use ucsgen::SubsetMask;

pub fn full(n: usize) -> u8 {
    ((1u16 << n) - 1) as u8
}

fn sort_key(m: u8) -> (Reverse<u32>, u8) {
    (Reverse(m.count_ones()), m)
}

pub fn sorted(mut masks: Vec<u8>) -> Vec<u8> {
    masks.sort_by_key(|&m| sort_key(m));
    masks.dedup();
    masks
}

fn relabel(images: &[usize], m: u8) -> u8 {
    (0..images.len())
        .filter(|i| m & (1 << i) != 0)
        .fold(0, |acc, i| acc | 1 << images[i])
}

pub fn all_images(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Image of a family under every permutation, each sorted.
pub fn orbit(n: usize, masks: &[u8]) -> Vec<Vec<u8>> {
    all_images(n)
        .iter()
        .map(|p| sorted(masks.iter().map(|&m| relabel(p, m)).collect()))
        .collect()
}

/// Smallest string over all relabelings.
pub fn min_string(n: usize, masks: &[u8]) -> Vec<u8> {
    orbit(n, masks).into_iter().min().unwrap()
}

pub fn is_min(n: usize, masks: &[u8]) -> bool {
    min_string(n, masks) == sorted(masks.to_vec())
}

pub fn automorphisms(n: usize, masks: &[u8]) -> u64 {
    let own = sorted(masks.to_vec());
    orbit(n, masks).into_iter().filter(|o| *o == own).count() as u64
}

pub fn union_closed(masks: &[u8]) -> bool {
    masks
        .iter()
        .all(|a| masks.iter().all(|b| masks.contains(&(a | b))))
}

pub fn intersection_closed(masks: &[u8]) -> bool {
    masks
        .iter()
        .all(|a| masks.iter().all(|b| masks.contains(&(a & b))))
}

/// Every union-closed family on `{1..n}` containing `Ω_n` and `∅`, each
/// sorted, with `∅` last.
pub fn labeled_ucs(n: usize) -> Vec<Vec<u8>> {
    let proper: Vec<u8> = (1..full(n)).collect();
    let mut out = Vec::new();
    for choice in 0u64..1 << proper.len() {
        let mut masks = vec![full(n), 0];
        masks.extend(
            (0..proper.len())
                .filter(|i| choice >> i & 1 == 1)
                .map(|i| proper[i]),
        );
        if union_closed(&masks) {
            out.push(sorted(masks));
        }
    }
    out
}

/// Every intersection-closed family on `{1..n}` containing `Ω_n`.
pub fn labeled_moore(n: usize) -> Vec<Vec<u8>> {
    let others: Vec<u8> = (0..full(n)).collect();
    let mut out = Vec::new();
    for choice in 0u64..1 << others.len() {
        let mut masks = vec![full(n)];
        masks.extend(
            (0..others.len())
                .filter(|i| choice >> i & 1 == 1)
                .map(|i| others[i]),
        );
        if intersection_closed(&masks) {
            out.push(sorted(masks));
        }
    }
    out
}

/// Serialized form: non-empty members, hex, comma separated.
pub fn line(masks: &[u8]) -> String {
    masks
        .iter()
        .filter(|&&m| m != 0)
        .map(|m| format!("{m:x}"))
        .join(",")
}

pub fn to_masks(v: &[u8]) -> Vec<SubsetMask> {
    v.iter().copied().map(SubsetMask).collect()
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
