//! Exit criteria. Prints one PASS/FAIL line per criterion and fails the
//! test target if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use ucsgen::canon::canonical_step;
use ucsgen::counts::{complement_family, complement_masks, is_moore_family};
use ucsgen::{
    brute_force_closed, enumerate, is_canonical_naive, moore_from_ucs, order_less, CountingVisitor,
    Enumerator, Family, SplitSpec, SubsetMask, UniverseContext,
};

use common::*;

/// Counts for one universe from a full run.
struct Tally {
    classes: u64,
    labeled: BigUint,
    sparse: u64,
    elapsed: Duration,
}

fn tally(n: usize) -> Tally {
    let ctx = UniverseContext::new(n).unwrap();
    let start = Instant::now();
    let (_, c) = Enumerator::new(&ctx, CountingVisitor::new(&ctx)).run();
    Tally {
        classes: c.classes,
        labeled: c.labeled_big(),
        sparse: c.sparse,
        elapsed: start.elapsed(),
    }
}

fn big(s: &str) -> BigUint {
    s.parse().unwrap()
}

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

const TABLE1_CLASSES: [u64; 6] = [1, 3, 14, 165, 14480, 108281182];
const TABLE1_LABELED: [&str; 6] = ["1", "4", "45", "2271", "1373701", "75965474236"];
const TABLE2_CLASSES: [u64; 6] = [2, 5, 19, 184, 14664, 108295846];
const TABLE2_LABELED: [&str; 6] = ["2", "7", "61", "2480", "1385552", "75973751474"];
const TABLE3_SPARSE: [u64; 6] = [0, 0, 0, 2, 27, 3133];

fn criterion_1(tallies: &[Tally]) -> Outcome {
    let elapsed: Duration = tallies[..5].iter().map(|t| t.elapsed).sum();
    for n in 1..=5 {
        let t = &tallies[n - 1];
        check(
            t.classes == TABLE1_CLASSES[n - 1],
            format!("n={n}: {} classes", t.classes),
        )?;
        check(
            t.labeled == big(TABLE1_LABELED[n - 1]),
            format!("n={n}: {} labeled", t.labeled),
        )?;
    }
    check(
        elapsed < Duration::from_secs(1),
        format!("took {elapsed:.2?}"),
    )?;
    Ok(format!("n=1..5 classes and labeled exact, {elapsed:.2?}"))
}

fn criterion_2(tallies: &[Tally]) -> Outcome {
    let t = &tallies[5];
    check(t.classes == 108_281_182, format!("{} classes", t.classes))?;
    check(
        t.labeled == big("75965474236"),
        format!("{} labeled", t.labeled),
    )?;
    check(
        t.elapsed < Duration::from_secs(600),
        format!("took {:.2?}", t.elapsed),
    )?;
    Ok(format!(
        "108281182 classes, 75965474236 labeled, {:.2?}",
        t.elapsed
    ))
}

fn criterion_3(tallies: &[Tally]) -> Outcome {
    let mut classes = vec![1u64];
    let mut labeled = vec![BigUint::from(1u32)];
    for n in 1..=6 {
        classes.push(tallies[n - 1].classes);
        labeled.push(tallies[n - 1].labeled.clone());
        let (mc, ml) = moore_from_ucs(&classes, &labeled).map_err(|e| e.to_string())?;
        check(
            mc == TABLE2_CLASSES[n - 1],
            format!("n={n}: {mc} Moore classes"),
        )?;
        check(
            ml == big(TABLE2_LABELED[n - 1]),
            format!("n={n}: {ml} labeled Moore"),
        )?;
    }
    // n = 7 from the published union-closed values
    classes.push(2_796_163_091_470_050);
    labeled.push(big("14087647703920103947"));
    let (mc, ml) = moore_from_ucs(&classes, &labeled).map_err(|e| e.to_string())?;
    check(
        mc == 2_796_163_199_765_896,
        format!("n=7: {mc} Moore classes"),
    )?;
    check(
        ml == big("14087648235707352472"),
        format!("n=7: {ml} labeled Moore"),
    )?;
    Ok("n=1..6 from enumeration and n=7 from published inputs exact".into())
}

fn criterion_4(tallies: &[Tally]) -> Outcome {
    for n in 1..=6 {
        let s = tallies[n - 1].sparse;
        check(s == TABLE3_SPARSE[n - 1], format!("n={n}: {s} sparse"))?;
    }
    // a single shard of n = 7
    let ctx = UniverseContext::new(7).unwrap();
    let split = SplitSpec::new(1_000_000, 6, 3).unwrap();
    let start = Instant::now();
    let (stats, c) = Enumerator::new(&ctx, CountingVisitor::new(&ctx))
        .split(Some(split))
        .run();
    check(
        stats.visited > 0 && stats.visited == c.classes,
        "n=7 shard visited nothing",
    )?;
    check(
        5040 * c.classes >= c.labeled as u64 && c.labeled as u64 >= c.classes,
        "n=7 shard labeled out of range",
    )?;
    Ok(format!(
        "sparse (0,0,0,2,27,3133); n=7 shard {split} completed: {} classes in {:.2?}",
        c.classes,
        start.elapsed()
    ))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    for n in 1..=4 {
        let ctx = UniverseContext::new(n).unwrap();
        let labeled = labeled_ucs(n);
        let oracle: BTreeSet<String> = labeled
            .iter()
            .filter(|m| is_canonical_naive(&ctx, &Family::from_masks(n, &to_masks(m)).unwrap()))
            .map(|m| line(m))
            .collect();
        let mut lines = Vec::new();
        let mut total = 0u64;
        enumerate(
            &ctx,
            |f: &Family, aut| {
                lines.push(f.to_string());
                total += factorial(n) / aut;
            },
            None,
        );
        lines.sort();
        let oracle: Vec<String> = oracle.into_iter().collect();
        check(
            lines == oracle,
            format!("n={n}: representative sets differ"),
        )?;
        check(
            total == labeled.len() as u64,
            format!("n={n}: Σ n!/|Aut| = {total}, oracle {}", labeled.len()),
        )?;
    }
    let elapsed = start.elapsed();
    check(
        elapsed < Duration::from_secs(10),
        format!("took {elapsed:.2?}"),
    )?;
    Ok(format!(
        "n=1..4 identical to brute force, labeled 45 and 2271 agree, {elapsed:.2?}"
    ))
}

fn criterion_6() -> Outcome {
    let n = 4;
    let ctx = UniverseContext::new(n).unwrap();
    let mut reps = Vec::new();
    enumerate(&ctx, |f: &Family, _| reps.push(f.clone()), None);

    // prefixes of canonical families are canonical
    for f in &reps {
        let members: Vec<u8> = f.members().iter().map(|m| m.0).collect();
        for k in 1..=members.len() {
            let mut prefix = members[..k].to_vec();
            prefix.push(0);
            check(
                is_min(n, &prefix),
                format!("prefix {k} of {f} not canonical"),
            )?;
        }
    }

    // reduced-set closure test against brute force, every extension attempt
    let order = ctx.order().to_vec();
    for masks in labeled_ucs(n) {
        let f = Family::from_masks(n, &to_masks(&masks)).unwrap();
        for &a in order.iter().filter(|&&a| order_less(f.largest(), a)) {
            let mut with = f.all_masks();
            with.push(a);
            check(
                f.can_extend(a) == brute_force_closed(&with),
                format!("closure test {f} + {a}"),
            )?;
        }
    }

    // stabilizer-restricted canonicity against the naive test, whole tree
    for parent in &reps {
        for &a in order.iter().filter(|&&a| order_less(parent.largest(), a)) {
            if !parent.can_extend(a) {
                continue;
            }
            let mut child = parent.clone();
            child.extend(a);
            let group = fixing_larger(&ctx, &child, a.cardinality());
            let fast = canonical_step(&ctx, &child, &group).is_some();
            check(
                fast == is_canonical_naive(&ctx, &child),
                format!("canonicity of {child}"),
            )?;
        }
    }

    // incremental reduced set on random n = 5 paths
    let ctx5 = UniverseContext::new(5).unwrap();
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    for _ in 0..2000 {
        let mut f = Family::base(5).unwrap();
        loop {
            let legal: Vec<SubsetMask> = ctx5
                .order()
                .iter()
                .copied()
                .filter(|&a| order_less(f.largest(), a) && f.can_extend(a))
                .collect();
            if legal.is_empty() {
                break;
            }
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            f.extend(legal[(state % legal.len() as u64) as usize]);
            check(
                f.reduced() == f.recompute_reduced(),
                format!("reduced set of {f}"),
            )?;
        }
    }

    // split soundness at n = 5
    let mut whole = Vec::new();
    enumerate(&ctx5, |f: &Family, _| whole.push(f.to_string()), None);
    whole.sort();
    for modulus in [2, 3, 5] {
        for depth in [1, 2] {
            let mut merged = Vec::new();
            for residue in 0..modulus {
                let split = SplitSpec::new(modulus, residue, depth).unwrap();
                enumerate(
                    &ctx5,
                    |f: &Family, _| merged.push(f.to_string()),
                    Some(split),
                );
            }
            merged.sort();
            check(merged == whole, format!("split {modulus}/*/{depth}"))?;
        }
    }

    // complements
    for k in 1..=4 {
        for masks in labeled_ucs(k) {
            let f = Family::from_masks(k, &to_masks(&masks)).unwrap();
            let c = complement_family(&f);
            check(
                is_moore_family(&c, k),
                format!("complement of {f} not a Moore family"),
            )?;
            check(
                complement_masks(&c, k) == f.all_masks(),
                format!("complement of {f} not involutive"),
            )?;
        }
    }
    Ok(
        "prefix canonicity, closure test, stabilizer canonicity, reduced sets, splits, complements"
            .into(),
    )
}

fn fixing_larger(ctx: &UniverseContext, f: &Family, m: u32) -> Vec<u16> {
    let upper = sorted(
        f.members()
            .iter()
            .filter(|a| a.cardinality() > m)
            .map(|a| a.0)
            .collect(),
    );
    (0..ctx.permutations().len() as u16)
        .filter(|&i| {
            let p = ctx.perm(i);
            let image = upper.iter().map(|&a| p.relabel(SubsetMask(a)).0).collect();
            sorted(image) == upper
        })
        .collect()
}

fn main() {
    let tallies: Vec<Tally> = (1..=6).map(tally).collect();
    let results: Vec<(&str, Outcome)> = vec![
        ("1 union-closed counts n=1..5", criterion_1(&tallies)),
        ("2 union-closed counts n=6", criterion_2(&tallies)),
        ("3 Moore counts n=1..7", criterion_3(&tallies)),
        ("4 sparse counts n=1..6, n=7 shard", criterion_4(&tallies)),
        ("5 brute-force equivalence n<=4", criterion_5()),
        ("6 property suites", criterion_6()),
    ];
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
