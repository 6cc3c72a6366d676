//! Labeled, Moore and sparse counts derived from the union-closed
//! representatives, and their tabular rendering.
//!
//! Complementing every member in `Ω_n` turns a union-closed family into a
//! Moore family. A Moore family need not contain `∅`; its complement is a
//! union-closed family on `Ω_n` minus the intersection of all members, so
//! the Moore families on `Ω_n` correspond to union-closed families on
//! universes of every size `i ≤ n`, with `C(n, i)` placements when labeled.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::enumerate::{CountingVisitor, Enumerator, SplitSpec};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::subsets::{SubsetMask, UniverseContext};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountsReport {
    pub n: usize,
    pub ucs_classes: u64,
    pub ucs_labeled: BigUint,
    pub moore_classes: u64,
    pub moore_labeled: BigUint,
    pub sparse_classes: u64,
}

pub const TSV_HEADER: &str =
    "n\tucs_classes\tucs_labeled\tmoore_classes\tmoore_labeled\tsparse_classes";

impl CountsReport {
    /// Builds a report for `n` from the union-closed counts of universes
    /// `0..=n` (index 0 must be the single family `{∅}`).
    pub fn from_ucs(
        ucs_classes: &[u64],
        ucs_labeled: &[BigUint],
        sparse_classes: u64,
    ) -> Result<Self> {
        let (moore_classes, moore_labeled) = moore_from_ucs(ucs_classes, ucs_labeled)?;
        let n = ucs_classes.len() - 1;
        Ok(CountsReport {
            n,
            ucs_classes: ucs_classes[n],
            ucs_labeled: ucs_labeled[n].clone(),
            moore_classes,
            moore_labeled,
            sparse_classes,
        })
    }

    /// Sums shard reports for the same `n`.
    pub fn merge(reports: &[CountsReport]) -> Result<CountsReport> {
        let first = reports
            .first()
            .ok_or_else(|| Error::InvalidCounts("nothing to merge".into()))?;
        let mut total = CountsReport {
            n: first.n,
            ucs_classes: 0,
            ucs_labeled: BigUint::zero(),
            moore_classes: 0,
            moore_labeled: BigUint::zero(),
            sparse_classes: 0,
        };
        for r in reports {
            if r.n != first.n {
                return Err(Error::InvalidCounts(format!(
                    "cannot merge n = {} with n = {}",
                    r.n, first.n
                )));
            }
            total.ucs_classes += r.ucs_classes;
            total.ucs_labeled += &r.ucs_labeled;
            total.moore_classes += r.moore_classes;
            total.moore_labeled += &r.moore_labeled;
            total.sparse_classes += r.sparse_classes;
        }
        Ok(total)
    }

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            self.ucs_classes,
            self.ucs_labeled,
            self.moore_classes,
            self.moore_labeled,
            self.sparse_classes
        )
    }

    fn fields(&self) -> [String; 6] {
        [
            self.n.to_string(),
            self.ucs_classes.to_string(),
            self.ucs_labeled.to_string(),
            self.moore_classes.to_string(),
            self.moore_labeled.to_string(),
            self.sparse_classes.to_string(),
        ]
    }
}

impl FromStr for CountsReport {
    type Err = Error;

    /// Parses one TSV row.
    fn from_str(line: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad report row `{line}`"));
        let fields: Vec<&str> = line.trim_end_matches(['\r', '\n']).split('\t').collect();
        if fields.len() != 6 {
            return Err(bad());
        }
        Ok(CountsReport {
            n: fields[0].parse().map_err(|_| bad())?,
            ucs_classes: fields[1].parse().map_err(|_| bad())?,
            ucs_labeled: fields[2].parse().map_err(|_| bad())?,
            moore_classes: fields[3].parse().map_err(|_| bad())?,
            moore_labeled: fields[4].parse().map_err(|_| bad())?,
            sparse_classes: fields[5].parse().map_err(|_| bad())?,
        })
    }
}

/// Parses TSV output of [`emit_report`]; the header line is optional.
pub fn parse_tsv(text: &str) -> Result<Vec<CountsReport>> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && *l != TSV_HEADER)
        .map(str::parse)
        .collect()
}

/// `C(n, k)`
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Moore class and labeled counts on `Ω_n` from union-closed counts on
/// `Ω_0, ..., Ω_n`.
pub fn moore_from_ucs(ucs_classes: &[u64], ucs_labeled: &[BigUint]) -> Result<(u64, BigUint)> {
    if ucs_classes.is_empty() || ucs_classes.len() != ucs_labeled.len() {
        return Err(Error::InvalidCounts(
            "class and labeled counts must cover 0..=n".into(),
        ));
    }
    if ucs_classes[0] != 1 || !ucs_labeled[0].is_one() {
        return Err(Error::InvalidCounts(
            "universe 0 has exactly one family".into(),
        ));
    }
    let n = ucs_classes.len() - 1;
    let classes = ucs_classes.iter().sum();
    let labeled = ucs_labeled
        .iter()
        .enumerate()
        .map(|(i, l)| binomial(n, i) * l)
        .sum();
    Ok((classes, labeled))
}

/// `{Ω_n \ A : A ∈ f}` including the complement of `∅`, in increasing
/// subset order.
pub fn complement_family(f: &Family) -> Vec<SubsetMask> {
    complement_masks(&f.all_masks(), f.n())
}

pub fn complement_masks(masks: &[SubsetMask], n: usize) -> Vec<SubsetMask> {
    let mut out: Vec<SubsetMask> = masks.iter().map(|m| m.complement(n)).collect();
    out.sort_by(|a, b| a.order_cmp(*b));
    out
}

/// Intersection-closed and containing the universe.
pub fn is_moore_family(masks: &[SubsetMask], n: usize) -> bool {
    let present = masks.iter().fold(0u128, |acc, m| acc | 1u128 << m.0);
    present & (1u128 << SubsetMask::full(n).0) != 0
        && masks.iter().all(|a| {
            masks
                .iter()
                .all(|b| present & (1u128 << a.intersection(*b).0) != 0)
        })
}

/// Number of sparse classes on `{1..n}`, by filtering the full enumeration.
pub fn sparse_count(ctx: &UniverseContext) -> u64 {
    Enumerator::new(ctx, CountingVisitor::new(ctx))
        .run()
        .1
        .sparse
}

/// Runs the enumeration for `n` (optionally one shard of it) and the
/// smaller universes needed for the Moore columns.
///
/// Smaller universes are only counted by the residue-0 shard, so the
/// reports of all shards of one split add up to the unsplit report.
pub fn counts_report(n: usize, split: Option<SplitSpec>) -> Result<CountsReport> {
    let ctx = UniverseContext::new(n)?;
    let (_, top) = Enumerator::new(&ctx, CountingVisitor::new(&ctx))
        .split(split)
        .run();
    let include_lower = split.is_none_or(|s| s.residue() == 0);

    let mut classes = vec![0u64; n + 1];
    let mut labeled = vec![BigUint::zero(); n + 1];
    if include_lower {
        classes[0] = 1;
        labeled[0] = BigUint::one();
        for i in 1..n {
            let lower = UniverseContext::new(i)?;
            let (_, c) = Enumerator::new(&lower, CountingVisitor::new(&lower)).run();
            classes[i] = c.classes;
            labeled[i] = c.labeled_big();
        }
    }
    classes[n] = top.classes;
    labeled[n] = top.labeled_big();

    let moore_classes = classes.iter().sum();
    let moore_labeled = labeled
        .iter()
        .enumerate()
        .map(|(i, l)| binomial(n, i) * l)
        .sum();
    Ok(CountsReport {
        n,
        ucs_classes: top.classes,
        ucs_labeled: top.labeled_big(),
        moore_classes,
        moore_labeled,
        sparse_classes: top.sparse,
    })
}

/// Reports for every universe `1..=n`, each universe enumerated once.
pub fn report_table(n: usize) -> Result<Vec<CountsReport>> {
    crate::subsets::check_universe(n)?;
    let mut classes = vec![1u64];
    let mut labeled = vec![BigUint::one()];
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let ctx = UniverseContext::new(i)?;
        let (_, c) = Enumerator::new(&ctx, CountingVisitor::new(&ctx)).run();
        classes.push(c.classes);
        labeled.push(c.labeled_big());
        out.push(CountsReport::from_ucs(&classes, &labeled, c.sparse)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReportFormat {
    Text,
    #[default]
    Tsv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" | "text-table" => Ok(ReportFormat::Text),
            "tsv" => Ok(ReportFormat::Tsv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Renders reports; every number is a plain decimal integer.
pub fn emit_report(reports: &[CountsReport], format: ReportFormat) -> String {
    let mut out = String::new();
    match format {
        ReportFormat::Tsv => {
            out.push_str(TSV_HEADER);
            out.push('\n');
            for r in reports {
                out.push_str(&r.tsv_row());
                out.push('\n');
            }
        }
        ReportFormat::Text => {
            let header: Vec<&str> = TSV_HEADER.split('\t').collect();
            let rows: Vec<[String; 6]> = reports.iter().map(CountsReport::fields).collect();
            let widths: Vec<usize> = (0..6)
                .map(|c| {
                    rows.iter()
                        .map(|r| r[c].len())
                        .chain([header[c].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: &mut dyn Iterator<Item = &str>, out: &mut String| {
                let parts: Vec<String> = cells
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:>w$}"))
                    .collect();
                let _ = writeln!(out, "{}", parts.join("  "));
            };
            line(&mut header.iter().copied(), &mut out);
            let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
            let _ = writeln!(out, "{}", rule.join("  "));
            for r in &rows {
                line(&mut r.iter().map(String::as_str), &mut out);
            }
        }
    }
    out
}
