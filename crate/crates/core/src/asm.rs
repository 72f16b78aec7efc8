//! Alternating sign matrices: validation, the inversion statistic, the
//! `(k, n, p)` statistics of the equinumerosity conjecture, and exhaustive
//! enumeration.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsmError {
    #[error("matrix must be non-empty and square: row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("entry {value} at (row {row}, column {col}) is not in {{-1, 0, 1}}")]
    BadEntry { row: usize, col: usize, value: i64 },

    #[error("row {row} sums to {sum}, expected 1")]
    BadRowSum { row: usize, sum: i64 },

    #[error("column {col} sums to {sum}, expected 1")]
    BadColSum { col: usize, sum: i64 },

    #[error("nonzero entries do not alternate in row {row} (prefix sum leaves {{0,1}} at column {col})")]
    RowAlternation { row: usize, col: usize },

    #[error("nonzero entries do not alternate in column {col} (prefix sum leaves {{0,1}} at row {row})")]
    ColAlternation { row: usize, col: usize },
}

/// A validated alternating sign matrix of order `m`.
///
/// Entries lie in `{-1, 0, 1}`, every row and column sums to 1, and every
/// row/column prefix sum lies in `{0, 1}` (equivalently, the nonzero entries
/// alternate in sign and start and end with `+1`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Asm {
    m: usize,
    entries: Vec<Vec<i8>>,
}

/// Statistics of an alternating sign matrix: order, position of the `1` in
/// the top row, number of `-1` entries, and the inversion number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsmStats {
    pub m: usize,
    pub k: usize,
    pub n: usize,
    pub p: usize,
}

impl Asm {
    pub fn order(&self) -> usize {
        self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.entries
    }

    /// Inversion number by the defining quadruple sum
    /// `sum over i < k, l < j of a[i][j] * a[k][l]`.
    pub fn inversions(&self) -> usize {
        let m = self.m;
        let mut total: i64 = 0;
        for i in 0..m {
            for j in 0..m {
                if self.entries[i][j] == 0 {
                    continue;
                }
                let aij = self.entries[i][j] as i64;
                for k in i + 1..m {
                    for l in 0..j {
                        total += aij * self.entries[k][l] as i64;
                    }
                }
            }
        }
        usize::try_from(total).expect("inversion number of a valid ASM is nonnegative")
    }

    /// Same statistic via two-dimensional suffix/prefix sums, `O(m^2)`.
    pub fn inversions_fast(&self) -> usize {
        let m = self.m;
        // below[k][l] = sum of entries in rows > k, columns < l
        let mut below = vec![vec![0i64; m + 1]; m + 1];
        for i in (0..m).rev() {
            for j in 1..=m {
                below[i][j] = below[i + 1][j] + below[i][j - 1] - below[i + 1][j - 1]
                    + self.entries[i][j - 1] as i64;
            }
        }
        let mut total = 0i64;
        for i in 0..m {
            for j in 0..m {
                if self.entries[i][j] != 0 {
                    total += self.entries[i][j] as i64 * below[i + 1][j];
                }
            }
        }
        usize::try_from(total).expect("inversion number of a valid ASM is nonnegative")
    }

    /// `(m, k, n, p)`: order, top-row position of the unique `+1`, number of
    /// `-1` entries, inversion number.
    pub fn stats(&self) -> AsmStats {
        let k = self.entries[0]
            .iter()
            .position(|&v| v == 1)
            .expect("top row of a valid ASM contains +1")
            + 1;
        let n = self.entries.iter().flatten().filter(|&&v| v == -1).count();
        AsmStats { m: self.m, k, n, p: self.inversions() }
    }

    pub fn is_permutation_matrix(&self) -> bool {
        self.entries.iter().flatten().all(|&v| v != -1)
    }
}

impl fmt::Debug for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Asm(order {})", self.m)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "  [{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct AsmJson {
    m: usize,
    entries: Vec<Vec<i64>>,
}

impl Serialize for Asm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Vec<i64>> =
            self.entries.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
        AsmJson { m: self.m, entries }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Asm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = AsmJson::deserialize(deserializer)?;
        if raw.entries.len() != raw.m {
            return Err(serde::de::Error::custom(format!(
                "declared order {} but {} rows",
                raw.m,
                raw.entries.len()
            )));
        }
        validate_asm(&raw.entries).map_err(serde::de::Error::custom)
    }
}

/// Validates a square integer matrix as an alternating sign matrix via the
/// prefix-sum characterization.
pub fn validate_asm(entries: &[Vec<i64>]) -> Result<Asm, AsmError> {
    let m = entries.len();
    if m == 0 {
        return Err(AsmError::NotSquare { row: 0, len: 0, expected: 1 });
    }
    for (i, row) in entries.iter().enumerate() {
        if row.len() != m {
            return Err(AsmError::NotSquare { row: i + 1, len: row.len(), expected: m });
        }
        for (j, &v) in row.iter().enumerate() {
            if !(-1..=1).contains(&v) {
                return Err(AsmError::BadEntry { row: i + 1, col: j + 1, value: v });
            }
        }
    }
    for (i, row) in entries.iter().enumerate() {
        let mut prefix = 0i64;
        for (j, &v) in row.iter().enumerate() {
            prefix += v;
            if !(0..=1).contains(&prefix) {
                return Err(AsmError::RowAlternation { row: i + 1, col: j + 1 });
            }
        }
        if prefix != 1 {
            return Err(AsmError::BadRowSum { row: i + 1, sum: prefix });
        }
    }
    for j in 0..m {
        let mut prefix = 0i64;
        for (i, row) in entries.iter().enumerate() {
            prefix += row[j];
            if !(0..=1).contains(&prefix) {
                return Err(AsmError::ColAlternation { row: i + 1, col: j + 1 });
            }
        }
        if prefix != 1 {
            return Err(AsmError::BadColSum { col: j + 1, sum: prefix });
        }
    }
    Ok(Asm {
        m,
        entries: entries.iter().map(|r| r.iter().map(|&v| v as i8).collect()).collect(),
    })
}

/// Admissible next rows given the current column prefix sums: entries chosen
/// left to right in `-1 < 0 < 1` order, keeping every row and column prefix
/// sum in `{0, 1}` and the row sum equal to 1.
fn rows_for(cols: &[u8], out: &mut Vec<Vec<i8>>) {
    let m = cols.len();
    fn rec(cols: &[u8], row: &mut Vec<i8>, row_sum: i8, out: &mut Vec<Vec<i8>>) {
        let j = row.len();
        let m = cols.len();
        if j == m {
            if row_sum == 1 {
                out.push(row.clone());
            }
            return;
        }
        for v in [-1i8, 0, 1] {
            if v == -1 && cols[j] != 1 {
                continue;
            }
            if v == 1 && cols[j] != 0 {
                continue;
            }
            let s = row_sum + v;
            if !(0..=1).contains(&s) {
                continue;
            }
            // feasibility: the remaining columns must allow the row sum to reach 1
            row.push(v);
            rec(cols, row, s, out);
            row.pop();
        }
    }
    rec(cols, &mut Vec::with_capacity(m), 0, out);
}

fn complete(m: usize, cols: Vec<u8>, acc: &mut Vec<Vec<i8>>, out: &mut Vec<Asm>) {
    if acc.len() == m {
        if cols.iter().all(|&c| c == 1) {
            out.push(Asm { m, entries: acc.clone() });
        }
        return;
    }
    let mut rows = Vec::new();
    rows_for(&cols, &mut rows);
    for row in rows {
        let next: Vec<u8> =
            cols.iter().zip(&row).map(|(&c, &v)| (c as i8 + v) as u8).collect();
        acc.push(row);
        complete(m, next, acc, out);
        acc.pop();
    }
}

/// All alternating sign matrices of order `m` in row-major lexicographic
/// order (entries compared as `-1 < 0 < 1`).
pub fn enumerate_asms(m: usize) -> impl Iterator<Item = Asm> {
    enumerate_asms_jobs(m, 1).into_iter()
}

/// Like [`enumerate_asms`] with `jobs` worker threads partitioned on the
/// first row; the output order is canonical regardless of `jobs`.
pub fn enumerate_asms_jobs(m: usize, jobs: usize) -> Vec<Asm> {
    assert!(m >= 1, "order must be at least 1");
    let jobs = jobs.max(1);
    let mut first_rows = Vec::new();
    rows_for(&vec![0u8; m], &mut first_rows);
    let branch = |rows: &[Vec<i8>]| {
        let mut out = Vec::new();
        for row in rows {
            let cols: Vec<u8> = row.iter().map(|&v| v as u8).collect();
            complete(m, cols, &mut vec![row.clone()], &mut out);
        }
        out
    };
    if jobs == 1 || first_rows.len() < 2 {
        branch(&first_rows)
    } else {
        let chunks: Vec<&[Vec<i8>]> =
            first_rows.chunks(first_rows.len().div_ceil(jobs)).collect();
        std::thread::scope(|scope| {
            let handles: Vec<_> =
                chunks.into_iter().map(|chunk| scope.spawn(move || branch(chunk))).collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        })
    }
}

pub fn count_asms(m: usize) -> u64 {
    enumerate_asms_jobs(m, 1).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_5x5() -> Asm {
        validate_asm(&[
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 1, 0, 0],
            vec![1, -1, 0, 1, 0],
            vec![0, 1, 0, -1, 1],
            vec![0, 0, 0, 1, 0],
        ])
        .unwrap()
    }

    #[test]
    fn example_is_valid_with_expected_stats() {
        let s = example_5x5().stats();
        assert_eq!((s.m, s.k, s.n), (5, 2, 2));
        // golden value of the quadruple sum, frozen from direct evaluation
        assert_eq!(s.p, 4);
        assert!(!example_5x5().is_permutation_matrix());
    }

    #[test]
    fn one_by_one() {
        let a = validate_asm(&[vec![1]]).unwrap();
        let s = a.stats();
        assert_eq!((s.m, s.k, s.n, s.p), (1, 1, 0, 0));
        assert!(a.is_permutation_matrix());
    }

    #[test]
    fn validation_diagnostics() {
        assert!(matches!(validate_asm(&[]), Err(AsmError::NotSquare { .. })));
        assert!(matches!(
            validate_asm(&[vec![1, 0], vec![0]]),
            Err(AsmError::NotSquare { row: 2, len: 1, expected: 2 })
        ));
        assert!(matches!(
            validate_asm(&[vec![2, -1], vec![-1, 2]]),
            Err(AsmError::BadEntry { row: 1, col: 1, value: 2 })
        ));
        // leading -1 breaks the row prefix constraint
        assert!(matches!(
            validate_asm(&[vec![-1, 1], vec![1, 0]]),
            Err(AsmError::RowAlternation { row: 1, col: 1 })
        ));
        // all-zero row sums to 0
        assert!(matches!(
            validate_asm(&[vec![0, 0], vec![1, 1]]),
            Err(AsmError::BadRowSum { row: 1, sum: 0 })
        ));
        // valid rows but a column repeats +1
        assert!(matches!(
            validate_asm(&[vec![1, 0], vec![1, 0]]),
            Err(AsmError::ColAlternation { row: 2, col: 1 })
        ));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(count_asms(1), 1);
        assert_eq!(count_asms(2), 2);
        assert_eq!(count_asms(3), 7);
        assert_eq!(count_asms(4), 42);
    }

    #[test]
    fn enumeration_is_lexicographic_and_valid() {
        let all = enumerate_asms_jobs(3, 1);
        let flat: Vec<Vec<i8>> =
            all.iter().map(|a| a.rows().iter().flatten().copied().collect()).collect();
        let mut sorted = flat.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(flat, sorted);
        for a in &all {
            let raw: Vec<Vec<i64>> =
                a.rows().iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
            validate_asm(&raw).unwrap();
        }
    }

    #[test]
    fn parallel_enumeration_matches_serial() {
        for jobs in [2, 5] {
            assert_eq!(enumerate_asms_jobs(4, jobs), enumerate_asms_jobs(4, 1));
        }
    }

    #[test]
    fn fast_inversions_match_direct_small() {
        for a in enumerate_asms(4) {
            assert_eq!(a.inversions(), a.inversions_fast(), "{a:?}");
        }
    }

    #[test]
    fn prefix_sum_equals_alternation_characterization() {
        // exhaustive over all 3^9 matrices of order 3
        fn alternation_ok(e: &[Vec<i64>]) -> bool {
            let m = e.len();
            let lines: Vec<Vec<i64>> = (0..m)
                .map(|i| e[i].clone())
                .chain((0..m).map(|j| (0..m).map(|i| e[i][j]).collect()))
                .collect();
            lines.iter().all(|line| {
                let nz: Vec<i64> = line.iter().copied().filter(|&v| v != 0).collect();
                line.iter().sum::<i64>() == 1 && nz.windows(2).all(|w| w[0] * w[1] == -1)
            })
        }
        for code in 0..3usize.pow(9) {
            let mut c = code;
            let vals: Vec<i64> = (0..9)
                .map(|_| {
                    let v = (c % 3) as i64 - 1;
                    c /= 3;
                    v
                })
                .collect();
            let e: Vec<Vec<i64>> = vals.chunks(3).map(|ch| ch.to_vec()).collect();
            assert_eq!(validate_asm(&e).is_ok(), alternation_ok(&e), "{e:?}");
        }
    }

    #[test]
    fn permutation_matrices_within_s4_transport_inversions() {
        let mut word: Vec<usize> = (1..=4).collect();
        loop {
            let p = crate::perm::Permutation::from_word(word.clone()).unwrap();
            let a = p.matrix();
            assert!(a.is_permutation_matrix());
            assert_eq!(a.stats().n, 0);
            assert_eq!(a.inversions(), p.inversions());
            if !crate::perm::next_permutation(&mut word) {
                break;
            }
        }
    }

    #[test]
    fn serde_round_trip() {
        let a = example_5x5();
        let json = serde_json::to_string(&a).unwrap();
        assert!(json.starts_with(r#"{"m":5,"entries":[[0,1,0,0,0],"#));
        let back: Asm = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Asm>(r#"{"m":2,"entries":[[1,0]]}"#).is_err());
        assert!(serde_json::from_str::<Asm>(r#"{"m":1,"entries":[[0]]}"#).is_err());
    }
}
