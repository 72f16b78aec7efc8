//! Exhaustive verification that alternating sign matrices and descending
//! plane partitions are equinumerous bucket by bucket under the `(k, n, p)`
//! statistics: top-row position of the `1` / one more than the number of
//! parts equal to `m`, number of `-1` entries / special parts, and
//! inversions / total parts.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize};

use crate::asm::enumerate_asms_jobs;
use crate::dpp::enumerate_dpps_jobs;

/// Counts of objects by `(k, n, p)` for one side of the correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatHistogram {
    pub m: usize,
    counts: BTreeMap<(usize, usize, usize), u64>,
    pub total: u64,
}

impl StatHistogram {
    fn from_counts(m: usize, counts: BTreeMap<(usize, usize, usize), u64>) -> Self {
        let total = counts.values().sum();
        StatHistogram { m, counts, total }
    }

    pub fn counts(&self) -> &BTreeMap<(usize, usize, usize), u64> {
        &self.counts
    }

    pub fn get(&self, key: (usize, usize, usize)) -> u64 {
        self.counts.get(&key).copied().unwrap_or(0)
    }
}

impl Serialize for StatHistogram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            m: usize,
            total: u64,
            counts: Keyed<'a>,
        }
        struct Keyed<'a>(&'a BTreeMap<(usize, usize, usize), u64>);
        impl Serialize for Keyed<'_> {
            fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (&(k, n, p), count) in self.0 {
                    map.serialize_entry(&format!("{k},{n},{p}"), count)?;
                }
                map.end()
            }
        }
        Json { m: self.m, total: self.total, counts: Keyed(&self.counts) }.serialize(serializer)
    }
}

/// Histogram of all alternating sign matrices of order `m`.
pub fn histogram_asm(m: usize) -> StatHistogram {
    histogram_asm_jobs(m, 1)
}

pub fn histogram_asm_jobs(m: usize, jobs: usize) -> StatHistogram {
    let mut counts = BTreeMap::new();
    for a in enumerate_asms_jobs(m, jobs) {
        let s = a.stats();
        *counts.entry((s.k, s.n, s.p)).or_insert(0) += 1;
    }
    StatHistogram::from_counts(m, counts)
}

/// Histogram of all descending plane partitions of dimension `m`.
pub fn histogram_dpp(m: usize) -> StatHistogram {
    histogram_dpp_jobs(m, 1)
}

pub fn histogram_dpp_jobs(m: usize, jobs: usize) -> StatHistogram {
    let mut counts = BTreeMap::new();
    for d in enumerate_dpps_jobs(m, jobs) {
        let s = d.stats(m).expect("enumerated partitions respect the bound");
        *counts.entry((s.k, s.n, s.p)).or_insert(0) += 1;
    }
    StatHistogram::from_counts(m, counts)
}

/// One `(k, n, p)` bucket with the counts from both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MrrBucket {
    pub k: usize,
    pub n: usize,
    pub p: usize,
    pub asm_count: u64,
    pub dpp_count: u64,
}

impl MrrBucket {
    pub fn matches(&self) -> bool {
        self.asm_count == self.dpp_count
    }
}

/// Full verification report for one `m`. Buckets that are zero on both sides
/// never appear (keys come from the union of the two histograms).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MrrReport {
    pub m: usize,
    pub asm_total: u64,
    pub dpp_total: u64,
    pub buckets: Vec<MrrBucket>,
}

impl MrrReport {
    pub fn pass(&self) -> bool {
        self.asm_total == self.dpp_total && self.buckets.iter().all(MrrBucket::matches)
    }

    pub fn mismatches(&self) -> Vec<&MrrBucket> {
        self.buckets.iter().filter(|b| !b.matches()).collect()
    }

    /// Human-readable table, one line per bucket plus a verdict line.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{:>3} {:>3} {:>3} {:>10} {:>10}  verdict", "k", "n", "p", "asm", "dpp")
            .unwrap();
        for b in &self.buckets {
            writeln!(
                out,
                "{:>3} {:>3} {:>3} {:>10} {:>10}  {}",
                b.k,
                b.n,
                b.p,
                b.asm_count,
                b.dpp_count,
                if b.matches() { "ok" } else { "MISMATCH" }
            )
            .unwrap();
        }
        writeln!(
            out,
            "m={}: totals {} / {} over {} buckets: {}",
            self.m,
            self.asm_total,
            self.dpp_total,
            self.buckets.len(),
            if self.pass() { "PASS" } else { "FAIL" }
        )
        .unwrap();
        out
    }
}

/// Compares the two histograms bucket by bucket.
pub fn verify_mrr(m: usize) -> MrrReport {
    verify_mrr_jobs(m, 1)
}

pub fn verify_mrr_jobs(m: usize, jobs: usize) -> MrrReport {
    let asm = histogram_asm_jobs(m, jobs);
    let dpp = histogram_dpp_jobs(m, jobs);
    let keys: std::collections::BTreeSet<(usize, usize, usize)> =
        asm.counts().keys().chain(dpp.counts().keys()).copied().collect();
    let buckets = keys
        .into_iter()
        .map(|(k, n, p)| MrrBucket {
            k,
            n,
            p,
            asm_count: asm.get((k, n, p)),
            dpp_count: dpp.get((k, n, p)),
        })
        .collect();
    MrrReport { m, asm_total: asm.total, dpp_total: dpp.total, buckets }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_dimension() {
        let asm = histogram_asm(1);
        let dpp = histogram_dpp(1);
        assert_eq!(asm.total, 1);
        assert_eq!(asm.get((1, 0, 0)), 1);
        assert_eq!(dpp.get((1, 0, 0)), 1);
        assert!(verify_mrr(1).pass());
    }

    #[test]
    fn small_dimensions_pass() {
        for m in 2..=4 {
            let report = verify_mrr(m);
            assert!(report.pass(), "m={m}\n{}", report.to_table());
            assert_eq!(report.asm_total, report.dpp_total);
        }
        assert_eq!(verify_mrr(3).asm_total, 7);
    }

    #[test]
    fn example_d0_bucket_is_populated_at_m6() {
        // the worked example has statistics (k, n, p) = (4, 3, 10)
        let dpp = histogram_dpp(6);
        assert!(dpp.get((4, 3, 10)) >= 1);
    }

    #[test]
    fn permutation_mass_is_m_factorial() {
        for m in 1..=5usize {
            let asm = histogram_asm(m);
            let dpp = histogram_dpp(m);
            let fact: u64 = (1..=m as u64).product();
            let asm_mass: u64 =
                asm.counts().iter().filter(|((_, n, _), _)| *n == 0).map(|(_, c)| c).sum();
            let dpp_mass: u64 =
                dpp.counts().iter().filter(|((_, n, _), _)| *n == 0).map(|(_, c)| c).sum();
            assert_eq!(asm_mass, fact, "m={m}");
            assert_eq!(dpp_mass, fact, "m={m}");
        }
    }

    #[test]
    fn histogram_is_order_insensitive() {
        // accumulate the statistics in reversed enumeration order
        let m = 4;
        let forward = histogram_dpp(m);
        let mut counts = BTreeMap::new();
        let all: Vec<_> = crate::dpp::enumerate_dpps(m).collect();
        for d in all.iter().rev() {
            let s = d.stats(m).unwrap();
            *counts.entry((s.k, s.n, s.p)).or_insert(0u64) += 1;
        }
        assert_eq!(forward.counts(), &counts);
    }

    #[test]
    fn parallel_histograms_match() {
        assert_eq!(verify_mrr_jobs(4, 3), verify_mrr_jobs(4, 1));
    }

    #[test]
    fn json_uses_comma_keys() {
        let json = serde_json::to_string(&histogram_dpp(2)).unwrap();
        assert_eq!(json, r#"{"m":2,"total":2,"counts":{"1,0,0":1,"2,0,1":1}}"#);
    }

    #[test]
    fn report_table_shape() {
        let table = verify_mrr(2).to_table();
        assert!(table.contains("PASS"));
        assert!(table.lines().count() >= 3);
    }
}
