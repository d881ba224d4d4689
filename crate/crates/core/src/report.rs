//! Sweep reports and their line-oriented serializations.
//!
//! Both formats are written by hand so the byte stream is fully pinned:
//! JSONL keys appear in a fixed order, counts print in full decimal, and
//! nothing (timestamps, locales, map iteration order) can perturb a rerun.
//! Two sweeps with identical parameters serialize to identical bytes.

use std::fmt::Write as _;
use std::io::{self, Write};

use itertools::Itertools;

use crate::divisibility::{ClassificationRecord, DivisibilityClass, ProductDivisibilityRecord};

pub const CYCLIC_CSV_HEADER: &str = "n,omega,phi,ring_homs,surj_homs,divides,exceptional,agrees";
pub const PRODUCT_CSV_HEADER: &str =
    "moduli,ring_homs,max_order_count,divides,flagged,class,verified";

impl ClassificationRecord {
    /// One JSON object per record, keys in fixed order.
    pub fn jsonl_line(&self) -> String {
        format!(
            "{{\"n\":{},\"omega\":{},\"phi\":{},\"ring_homs\":{},\"surj_homs\":{},\
             \"divides\":{},\"exceptional\":{},\"agrees\":{}}}",
            self.n,
            self.omega,
            self.phi,
            self.ring_homs,
            self.surj_homs,
            self.divides,
            self.exceptional,
            self.agrees
        )
    }

    /// One CSV row matching [`CYCLIC_CSV_HEADER`]; all fields are numeric
    /// or boolean, so no quoting is ever needed.
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            self.omega,
            self.phi,
            self.ring_homs,
            self.surj_homs,
            self.divides,
            self.exceptional,
            self.agrees
        )
    }
}

impl ProductDivisibilityRecord {
    pub fn jsonl_line(&self) -> String {
        format!(
            "{{\"moduli\":[{}],\"ring_homs\":{},\"max_order_count\":{},\"divides\":{},\
             \"flagged\":{},\"class\":\"{}\",\"verified\":{}}}",
            self.moduli.moduli().iter().join(","),
            self.ring_homs,
            self.max_order_count,
            self.divides,
            self.flagged,
            self.class.as_str(),
            self.verified
        )
    }

    /// Moduli join with 'x' (e.g. `2x3x5`) so the column never needs quoting.
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.moduli.moduli().iter().join("x"),
            self.ring_homs,
            self.max_order_count,
            self.divides,
            self.flagged,
            self.class.as_str(),
            self.verified
        )
    }
}

/// Result of a cyclic-modulus verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSweepReport {
    pub max_n: u64,
    pub records: Vec<ClassificationRecord>,
}

impl CyclicSweepReport {
    /// Moduli whose record disagrees with the classification. Must be
    /// empty; anything else is an implementation bug.
    pub fn disagreements(&self) -> Vec<u64> {
        self.records
            .iter()
            .filter(|r| !r.agrees)
            .map(|r| r.n)
            .collect()
    }

    pub fn exceptional_count(&self) -> usize {
        self.records.iter().filter(|r| r.exceptional).count()
    }

    pub fn regular_count(&self) -> usize {
        self.records.len() - self.exceptional_count()
    }

    pub fn summary_line(&self) -> String {
        format!(
            "cyclic sweep 2..={}: {} records, {} exceptional, {} regular, {} disagreements",
            self.max_n,
            self.records.len(),
            self.exceptional_count(),
            self.regular_count(),
            self.disagreements().len()
        )
    }

    pub fn to_jsonl_string(&self) -> String {
        let mut out = String::new();
        for record in &self.records {
            let _ = writeln!(out, "{}", record.jsonl_line());
        }
        out
    }

    pub fn to_csv_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{CYCLIC_CSV_HEADER}");
        for record in &self.records {
            let _ = writeln!(out, "{}", record.csv_line());
        }
        out
    }

    pub fn write_jsonl<W: Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(self.to_jsonl_string().as_bytes())
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(self.to_csv_string().as_bytes())
    }
}

/// Per-class record counts of a product sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassCounts {
    pub held: usize,
    pub flagged_and_failed: usize,
    pub flagged_and_held: usize,
    pub unflagged_and_failed: usize,
}

/// Result of a product-group verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSweepReport {
    pub max_k: u64,
    pub max_modulus: u64,
    pub records: Vec<ProductDivisibilityRecord>,
}

impl ProductSweepReport {
    pub fn class_counts(&self) -> ClassCounts {
        let mut counts = ClassCounts::default();
        for record in &self.records {
            match record.class {
                DivisibilityClass::Held => counts.held += 1,
                DivisibilityClass::FlaggedAndFailed => counts.flagged_and_failed += 1,
                DivisibilityClass::FlaggedAndHeld => counts.flagged_and_held += 1,
                DivisibilityClass::UnflaggedAndFailed => counts.unflagged_and_failed += 1,
            }
        }
        counts
    }

    pub fn summary_line(&self) -> String {
        let c = self.class_counts();
        format!(
            "product sweep k<={} moduli<={}: {} records, {} held, \
             {} flagged_and_failed, {} flagged_and_held, {} unflagged_and_failed",
            self.max_k,
            self.max_modulus,
            self.records.len(),
            c.held,
            c.flagged_and_failed,
            c.flagged_and_held,
            c.unflagged_and_failed
        )
    }

    pub fn to_jsonl_string(&self) -> String {
        let mut out = String::new();
        for record in &self.records {
            let _ = writeln!(out, "{}", record.jsonl_line());
        }
        out
    }

    pub fn to_csv_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{PRODUCT_CSV_HEADER}");
        for record in &self.records {
            let _ = writeln!(out, "{}", record.csv_line());
        }
        out
    }

    pub fn write_jsonl<W: Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(self.to_jsonl_string().as_bytes())
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(self.to_csv_string().as_bytes())
    }
}
