//! Batch front end shared by the `ucsgen` binary.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::counts::{complement_masks, counts_report, emit_report, report_table, ReportFormat};
use crate::enumerate::{enumerate, SplitSpec};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::subsets::{check_universe, SubsetMask, UniverseContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// One report row for `n`.
    Count,
    /// Stream the representatives, one per line.
    EmitReps,
    /// Report rows for every universe `1..=n`.
    Report,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "count" => Ok(Mode::Count),
            "emit-reps" => Ok(Mode::EmitReps),
            "report" => Ok(Mode::Report),
            other => Err(Error::Parse(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub mode: Mode,
    /// Prefix representatives with the order of their automorphism group.
    pub labeled: bool,
    /// Emit Moore family representatives instead of union-closed ones.
    pub moore: bool,
    /// Emit sparse representatives only.
    pub sparse_only: bool,
    pub split: Option<SplitSpec>,
    pub format: ReportFormat,
    /// Standard output when `None`.
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(n: usize, mode: Mode) -> Self {
        RunConfig {
            n,
            mode,
            labeled: false,
            moore: false,
            sparse_only: false,
            split: None,
            format: ReportFormat::Tsv,
            output: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_universe(self.n)?;
        if self.mode == Mode::Report && self.split.is_some() {
            return Err(Error::InvalidSplit(
                "report mode runs every universe and cannot be split".into(),
            ));
        }
        if self.moore && self.sparse_only {
            return Err(Error::Parse(
                "--sparse-only applies to union-closed families, not --moore".into(),
            ));
        }
        Ok(())
    }
}

/// Runs `config`, writing to its output file or to standard output.
pub fn run(config: &RunConfig) -> Result<()> {
    config.validate()?;
    match &config.output {
        Some(path) => {
            let file = File::create(path).map_err(|e| {
                Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
            })?;
            let mut out = BufWriter::new(file);
            run_to(config, &mut out)?;
            out.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            run_to(config, &mut out)?;
            out.flush()?;
        }
    }
    Ok(())
}

/// Runs `config` writing to `out`.
pub fn run_to(config: &RunConfig, out: &mut dyn Write) -> Result<()> {
    config.validate()?;
    match config.mode {
        Mode::Count => {
            let report = counts_report(config.n, config.split)?;
            out.write_all(emit_report(&[report], config.format).as_bytes())?;
        }
        Mode::Report => {
            let table = report_table(config.n)?;
            out.write_all(emit_report(&table, config.format).as_bytes())?;
        }
        Mode::EmitReps if config.moore => emit_moore(config, out)?,
        Mode::EmitReps => emit_ucs(config, out)?,
    }
    Ok(())
}

/// Streams representatives without collecting them; the first write
/// error stops output and is returned.
fn emit_ucs(config: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let ctx = UniverseContext::new(config.n)?;
    let mut failure: Option<io::Error> = None;
    let visitor = |f: &Family, automorphisms: u64| {
        if failure.is_some() || (config.sparse_only && !f.sparseness().is_sparse) {
            return;
        }
        let written = if config.labeled {
            writeln!(out, "{automorphisms}\t{f}")
        } else {
            writeln!(out, "{f}")
        };
        if let Err(e) = written {
            failure = Some(e);
        }
    };
    enumerate(&ctx, visitor, config.split);
    failure.map_or(Ok(()), |e| Err(e.into()))
}

/// Moore representatives on `Ω_n`: complements in `Ω_n` of the union-closed
/// representatives on `Ω_i`, `i = 0..=n`, with `Ω_i` the first `i`
/// elements. Smaller universes are written by the residue-0 shard only.
fn emit_moore(config: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let n = config.n;
    let include_lower = config.split.is_none_or(|s| s.residue() == 0);
    if include_lower {
        write_moore(out, &[SubsetMask::EMPTY], n, factorial(n), config.labeled)?;
    }
    for i in 1..=n {
        if i < n && !include_lower {
            continue;
        }
        let ctx = UniverseContext::new(i)?;
        let split = if i == n { config.split } else { None };
        let outside = factorial(n - i);
        let mut failure: Option<Error> = None;
        let visitor = |f: &Family, automorphisms: u64| {
            if failure.is_none() {
                let aut = automorphisms * outside;
                if let Err(e) = write_moore(out, &f.all_masks(), n, aut, config.labeled) {
                    failure = Some(e);
                }
            }
        };
        enumerate(&ctx, visitor, split);
        if let Some(e) = failure {
            return Err(e);
        }
    }
    Ok(())
}

fn write_moore(
    out: &mut dyn Write,
    ucs: &[SubsetMask],
    n: usize,
    aut: u64,
    labeled: bool,
) -> Result<()> {
    let moore = complement_masks(ucs, n);
    let line = moore
        .iter()
        .map(|m| format!("{m:x}"))
        .collect::<Vec<_>>()
        .join(",");
    if labeled {
        writeln!(out, "{aut}\t{line}")?;
    } else {
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// `n! / |Aut|` summed over labeled `emit-reps` output.
pub fn labeled_total(emitted: &str, n: usize) -> Result<BigUint> {
    let fact = factorial(n);
    emitted
        .lines()
        .filter(|l| !l.is_empty())
        .map(|line| {
            let (aut, _) = line
                .split_once('\t')
                .ok_or_else(|| Error::Parse(format!("no automorphism prefix in `{line}`")))?;
            let aut: u64 = aut
                .parse()
                .map_err(|_| Error::Parse(format!("bad prefix in `{line}`")))?;
            Ok(BigUint::from(fact / aut))
        })
        .sum()
}
