//! Descending plane partitions: validation, statistics, serialization, and
//! exhaustive enumeration.
//!
//! A descending plane partition is a shifted array of positive integers whose
//! row `i` starts at absolute column `i`. Four conditions must hold:
//!
//! 1. rows weakly decrease left to right,
//! 2. columns strictly decrease top to bottom (under the shifted alignment),
//! 3. (A) the first part of each row exceeds the row's length,
//! 4. (B) the first part of row `i` is at most the length of row `i-1`.
//!
//! The empty array is a valid descending plane partition. "Dimension m" is
//! not stored on the value; it is the counting bound "no part exceeds m".

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

/// Which of the defining conditions a candidate array violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// Condition 1: rows weakly decreasing.
    RowWeaklyDecreasing,
    /// Condition 2: columns strictly decreasing.
    ColumnStrictlyDecreasing,
    /// Condition (A): first part of a row exceeds the row length.
    FirstPartExceedsLength,
    /// Condition (B): first part of a row is at most the previous row's length.
    FirstPartWithinPreviousRow,
    /// All parts are positive integers.
    Positivity,
    /// Rows must be non-empty.
    EmptyRow,
}

impl Condition {
    /// Short diagnostic label: `1`, `2`, `A`, `B`, `positivity`, `empty-row`.
    pub fn label(self) -> &'static str {
        match self {
            Condition::RowWeaklyDecreasing => "1",
            Condition::ColumnStrictlyDecreasing => "2",
            Condition::FirstPartExceedsLength => "A",
            Condition::FirstPartWithinPreviousRow => "B",
            Condition::Positivity => "positivity",
            Condition::EmptyRow => "empty-row",
        }
    }
}

/// First violating cell of one condition, in the 1-based (row, absolute
/// column) convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub row: usize,
    pub col: usize,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "condition {} at (row {}, column {}): {}",
            self.condition.label(),
            self.row,
            self.col,
            self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DppError {
    #[error("invalid descending plane partition: {}", format_violations(.0))]
    Invalid(Vec<Violation>),

    #[error("dimension {m} too small: part {value} at (row {row}, column {col})")]
    DimensionTooSmall { m: usize, value: u32, row: usize, col: usize },

    #[error("malformed JSON: {0}")]
    Json(String),
}

fn format_violations(vs: &[Violation]) -> String {
    vs.iter().map(Violation::to_string).collect::<Vec<_>>().join("; ")
}

/// A validated descending plane partition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dpp {
    rows: Vec<Vec<u32>>,
}

/// Counting statistics of a descending plane partition relative to an
/// ambient dimension `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DppStats {
    /// Largest part, 0 for the empty partition.
    pub max_part: u32,
    /// Total number of parts.
    pub p: usize,
    /// Number of special parts (parts with `a <= col - row`).
    pub n: usize,
    /// Number of parts equal to `m`.
    pub eq_m: usize,
    /// `eq_m + 1`.
    pub k: usize,
}

impl Dpp {
    /// The empty descending plane partition.
    pub fn empty() -> Self {
        Dpp { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn part_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_part(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Cells holding special parts, i.e. `a <= col - row`, as 1-based
    /// (row, absolute column) pairs.
    pub fn special_positions(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for (i0, row) in self.rows.iter().enumerate() {
            let i = i0 + 1;
            for (t0, &part) in row.iter().enumerate() {
                let col = i + t0;
                if (part as usize) <= col - i {
                    out.insert((i, col));
                }
            }
        }
        out
    }

    /// Statistics relative to dimension `m`; errors when a part exceeds `m`.
    pub fn stats(&self, m: usize) -> Result<DppStats, DppError> {
        for (i0, row) in self.rows.iter().enumerate() {
            for (t0, &part) in row.iter().enumerate() {
                if part as usize > m {
                    return Err(DppError::DimensionTooSmall {
                        m,
                        value: part,
                        row: i0 + 1,
                        col: i0 + 1 + t0,
                    });
                }
            }
        }
        let eq_m = self.rows.iter().flatten().filter(|&&v| v as usize == m).count();
        Ok(DppStats {
            max_part: self.max_part(),
            p: self.part_count(),
            n: self.special_positions().len(),
            eq_m,
            k: eq_m + 1,
        })
    }

    /// Triangular rendering with the shifted indentation, one cell per column.
    pub fn to_text(&self) -> String {
        if self.rows.is_empty() {
            return "(empty)".to_string();
        }
        let width = self.max_part().to_string().len();
        let mut out = String::new();
        for (i0, row) in self.rows.iter().enumerate() {
            let mut line = " ".repeat(i0 * (width + 1));
            for (t0, part) in row.iter().enumerate() {
                if t0 > 0 {
                    line.push(' ');
                }
                line.push_str(&format!("{part:>width$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// Key realizing the canonical enumeration order: by number of rows, then
    /// lexicographically by the flattened parts (row lengths break ties).
    pub(crate) fn canonical_key(&self) -> (usize, Vec<u32>, Vec<usize>) {
        (
            self.rows.len(),
            self.rows.iter().flatten().copied().collect(),
            self.rows.iter().map(Vec::len).collect(),
        )
    }
}

impl fmt::Debug for Dpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dpp{:?}", self.rows)
    }
}

#[derive(Serialize, Deserialize)]
struct DppJson {
    rows: Vec<Vec<i64>>,
}

impl Serialize for Dpp {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Borrowed<'a> {
            rows: &'a [Vec<u32>],
        }
        Borrowed { rows: &self.rows }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Dpp {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = DppJson::deserialize(deserializer)?;
        validate_dpp(&raw.rows).map_err(serde::de::Error::custom)
    }
}

/// Canonical JSON form `{"rows": [[...], ...]}`.
pub fn serialize_dpp(d: &Dpp) -> String {
    serde_json::to_string(d).expect("serialization cannot fail")
}

/// Parses and validates the canonical JSON form.
pub fn parse_dpp(text: &str) -> Result<Dpp, DppError> {
    let raw: DppJson =
        serde_json::from_str(text).map_err(|e| DppError::Json(e.to_string()))?;
    validate_dpp(&raw.rows)
}

/// Validates an arbitrary ragged integer array against all defining
/// conditions. Each violated condition is reported once, with its first
/// violating cell in 1-based (row, absolute column) coordinates. Checks
/// that need a first part are skipped for empty rows, which are themselves
/// reported as `empty-row`.
pub fn validate_dpp(rows: &[Vec<i64>]) -> Result<Dpp, DppError> {
    let mut violations: Vec<Violation> = Vec::new();
    let mut seen: BTreeSet<Condition> = BTreeSet::new();
    let mut record = |violations: &mut Vec<Violation>, v: Violation| {
        if seen.insert(v.condition) {
            violations.push(v);
        }
    };

    for (i0, row) in rows.iter().enumerate() {
        let i = i0 + 1;
        if row.is_empty() {
            record(
                &mut violations,
                Violation {
                    condition: Condition::EmptyRow,
                    row: i,
                    col: i,
                    detail: format!("row {i} is empty"),
                },
            );
            continue;
        }
        if let Some(t0) = row.iter().position(|&v| v <= 0) {
            record(
                &mut violations,
                Violation {
                    condition: Condition::Positivity,
                    row: i,
                    col: i + t0,
                    detail: format!("part {} is not a positive integer", row[t0]),
                },
            );
        }
        // condition 1: weakly decreasing along the row
        if let Some(t0) = (0..row.len().saturating_sub(1)).find(|&t| row[t] < row[t + 1]) {
            record(
                &mut violations,
                Violation {
                    condition: Condition::RowWeaklyDecreasing,
                    row: i,
                    col: i + t0 + 1,
                    detail: format!("{} < {} breaks weak decrease", row[t0 + 1], row[t0]),
                },
            );
        }
        // condition (A): first part > row length
        if row[0] <= row.len() as i64 {
            record(
                &mut violations,
                Violation {
                    condition: Condition::FirstPartExceedsLength,
                    row: i,
                    col: i,
                    detail: format!("first part {} not > row length {}", row[0], row.len()),
                },
            );
        }
        let prev = if i0 > 0 { Some(&rows[i0 - 1]) } else { None };
        if let Some(prev) = prev.filter(|p| !p.is_empty()) {
            // condition (B): first part <= previous row length
            if row[0] > prev.len() as i64 {
                record(
                    &mut violations,
                    Violation {
                        condition: Condition::FirstPartWithinPreviousRow,
                        row: i,
                        col: i,
                        detail: format!(
                            "first part {} exceeds previous row length {}",
                            row[0],
                            prev.len()
                        ),
                    },
                );
            }
            // condition 2: strict decrease down each shared column; this
            // part at absolute column i + t0 sits below prev[t0 + 1]
            for (t0, &v) in row.iter().enumerate() {
                if let Some(&a) = prev.get(t0 + 1) {
                    if a <= v {
                        record(
                            &mut violations,
                            Violation {
                                condition: Condition::ColumnStrictlyDecreasing,
                                row: i,
                                col: i + t0,
                                detail: format!("{a} above {v} does not strictly decrease"),
                            },
                        );
                        break;
                    }
                }
            }
        }
    }

    if violations.is_empty() {
        Ok(Dpp { rows: rows.iter().map(|r| r.iter().map(|&v| v as u32).collect()).collect() })
    } else {
        Err(DppError::Invalid(violations))
    }
}

/// All valid single rows with parts at most `m`: weakly decreasing, first
/// part greater than the length (A).
fn first_rows(m: usize) -> Vec<Vec<u32>> {
    fn rec(m: u32, len: usize, row: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let t = row.len();
        if t == len {
            out.push(row.clone());
            return;
        }
        let hi = if t == 0 { m } else { row[t - 1] };
        for v in (1..=hi).rev() {
            if t == 0 && v as usize <= len {
                continue; // condition (A)
            }
            row.push(v);
            rec(m, len, row, out);
            row.pop();
        }
    }
    let mut out = Vec::new();
    for len in 1..m {
        rec(m as u32, len, &mut Vec::with_capacity(len), &mut out);
    }
    out
}

/// Appends to `out` every row that may follow `prev` in a valid descending
/// plane partition: length at most `len(prev) - 1`, first part at most
/// `len(prev)` (B) and greater than the new length (A), and each part
/// strictly less than the part of `prev` one column to the right.
fn next_rows(prev: &[u32], out: &mut Vec<Vec<u32>>) {
    let prev_len = prev.len();
    for len in 1..prev_len {
        let mut row = Vec::with_capacity(len);
        fn rec(
            prev: &[u32],
            len: usize,
            first_max: u32,
            row: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            let t = row.len();
            if t == len {
                out.push(row.clone());
                return;
            }
            let mut hi = if t == 0 { first_max } else { row[t - 1] };
            // column condition against prev[t + 1] (0-based)
            hi = hi.min(prev[t + 1].saturating_sub(1));
            for v in (1..=hi).rev() {
                if t == 0 && v as usize <= len {
                    continue; // condition (A)
                }
                row.push(v);
                rec(prev, len, first_max, row, out);
                row.pop();
            }
        }
        rec(prev, len, prev_len as u32, &mut row, out);
    }
}

fn extend_all(base: Vec<Vec<u32>>, out: &mut Vec<Dpp>) {
    out.push(Dpp { rows: base.clone() });
    let mut followers = Vec::new();
    next_rows(base.last().expect("non-empty stack"), &mut followers);
    for row in followers {
        let mut next = base.clone();
        next.push(row);
        extend_all(next, out);
    }
}

fn collect_from_first_rows(firsts: &[Vec<u32>]) -> Vec<Dpp> {
    let mut out = Vec::new();
    for first in firsts {
        extend_all(vec![first.clone()], &mut out);
    }
    out
}

/// All descending plane partitions with no part exceeding `m`, in canonical
/// order: the empty partition first, then by number of rows and
/// lexicographically by flattened parts.
pub fn enumerate_dpps(m: usize) -> impl Iterator<Item = Dpp> {
    enumerate_dpps_jobs(m, 1).into_iter()
}

/// Like [`enumerate_dpps`] but collecting with `jobs` worker threads
/// partitioned on the first row. The resulting order is canonical regardless
/// of `jobs`.
pub fn enumerate_dpps_jobs(m: usize, jobs: usize) -> Vec<Dpp> {
    assert!(m >= 1, "dimension must be at least 1");
    let jobs = jobs.max(1);
    let firsts = first_rows(m);
    let mut all: Vec<Dpp> = if jobs == 1 || firsts.len() < 2 {
        collect_from_first_rows(&firsts)
    } else {
        let chunks: Vec<&[Vec<u32>]> =
            firsts.chunks(firsts.len().div_ceil(jobs)).collect();
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| scope.spawn(move || collect_from_first_rows(chunk)))
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    all.push(Dpp::empty());
    all.sort_by_cached_key(Dpp::canonical_key);
    all
}

/// Number of descending plane partitions of dimension `m`, by enumeration.
pub fn count_dpps(m: usize) -> u64 {
    enumerate_dpps_jobs(m, 1).len() as u64
}
