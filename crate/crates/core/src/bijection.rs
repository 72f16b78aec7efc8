//! The bijection between permutations of `{1..m}` and descending plane
//! partitions of dimension `m` without special parts.
//!
//! The inversion word `(a_1, ..., a_{m-1})` of a permutation prescribes the
//! multiset of parts: the value `m+1-k` occurs `a_k` times, so each value
//! `v` occurs at most `v-1` times. Laying the parts out in weakly decreasing
//! order and starting a new row exactly when the next part would sit at a
//! position exceeding its value produces the unique no-special-part
//! partition with that multiset; in the lattice-path picture, `a_k` is the
//! number of horizontal steps at height `m+1-k`.
//!
//! The statistics transport pointwise: the total part count equals the
//! number of inversions, and the number of parts equal to `m` equals
//! `a_1`, the position of `1` in the word minus one.

use thiserror::Error;

use crate::dpp::{validate_dpp, Dpp};
use crate::perm::{InversionWord, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("partition has {count} special part(s); the bijection is defined only without them")]
    HasSpecialParts { count: usize },

    #[error("dimension {m} too small: largest part is {max_part}")]
    DimensionTooSmall { m: usize, max_part: u32 },

    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Maps a permutation to the descending plane partition of dimension
/// `m = |sigma|` without special parts. The identity maps to the empty
/// partition.
pub fn dpp_from_perm(sigma: &Permutation) -> Dpp {
    let m = sigma.m();
    let word = sigma.inversion_word();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    for (k0, &count) in word.entries().iter().enumerate() {
        let value = (m - k0) as i64; // m + 1 - k for k = k0 + 1
        for _ in 0..count {
            if value >= current.len() as i64 + 1 {
                current.push(value);
            } else {
                rows.push(std::mem::take(&mut current));
                current.push(value);
            }
        }
    }
    if !current.is_empty() {
        rows.push(current);
    }
    validate_dpp(&rows).expect("construction yields a valid partition")
}

/// Inverse map: recovers the permutation from a descending plane partition
/// without special parts whose parts do not exceed `m`.
pub fn perm_from_dpp(d: &Dpp, m: usize) -> Result<Permutation, BijectionError> {
    if d.max_part() as usize > m {
        return Err(BijectionError::DimensionTooSmall { m, max_part: d.max_part() });
    }
    let special = d.special_positions().len();
    if special > 0 {
        return Err(BijectionError::HasSpecialParts { count: special });
    }
    let mut counts = vec![0usize; m + 1];
    for row in d.rows() {
        for &v in row {
            counts[v as usize] += 1;
        }
    }
    // no-special-part partitions never contain a part equal to 1
    debug_assert_eq!(counts.get(1), Some(&0));
    let entries: Vec<usize> = (1..m).map(|k| counts[m + 1 - k]).collect();
    Ok(InversionWord::new(entries)?.to_permutation())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dpp::{enumerate_dpps, parse_dpp};
    use crate::perm::next_permutation;

    #[test]
    fn identity_maps_to_empty() {
        for m in 1..=6 {
            assert!(dpp_from_perm(&Permutation::identity(m)).is_empty());
        }
    }

    #[test]
    fn transposition_m2() {
        let p = Permutation::from_word(vec![2, 1]).unwrap();
        assert_eq!(dpp_from_perm(&p).rows(), &[vec![2]]);
        let d = parse_dpp(r#"{"rows":[[2]]}"#).unwrap();
        assert_eq!(perm_from_dpp(&d, 2).unwrap(), p);
    }

    #[test]
    fn empty_maps_to_identity() {
        assert_eq!(perm_from_dpp(&Dpp::empty(), 4).unwrap(), Permutation::identity(4));
    }

    #[test]
    fn round_trip_s5() {
        let mut word: Vec<usize> = (1..=5).collect();
        loop {
            let p = Permutation::from_word(word.clone()).unwrap();
            let d = dpp_from_perm(&p);
            assert_eq!(perm_from_dpp(&d, 5).unwrap(), p);
            if !next_permutation(&mut word) {
                break;
            }
        }
    }

    #[test]
    fn image_is_exactly_the_no_special_partitions() {
        for m in 1..=5usize {
            let mut image: Vec<Dpp> = Vec::new();
            let mut word: Vec<usize> = (1..=m).collect();
            loop {
                let p = Permutation::from_word(word.clone()).unwrap();
                image.push(dpp_from_perm(&p));
                if !next_permutation(&mut word) {
                    break;
                }
            }
            image.sort_by_cached_key(|d| format!("{d:?}"));
            image.dedup();
            let mut expected: Vec<Dpp> = enumerate_dpps(m)
                .filter(|d| d.stats(m).unwrap().n == 0)
                .collect();
            expected.sort_by_cached_key(|d| format!("{d:?}"));
            assert_eq!(image, expected, "m={m}");
        }
    }

    #[test]
    fn statistics_transport_pointwise() {
        for m in 2..=5usize {
            let mut word: Vec<usize> = (1..=m).collect();
            loop {
                let p = Permutation::from_word(word.clone()).unwrap();
                let d = dpp_from_perm(&p);
                let stats = d.stats(m).unwrap();
                assert_eq!(stats.p, p.inversions());
                assert_eq!(stats.n, 0);
                assert_eq!(stats.eq_m, p.position_of(1) - 1);
                if !next_permutation(&mut word) {
                    break;
                }
            }
        }
    }

    #[test]
    fn rejects_special_parts_and_small_dimension() {
        let with_special = parse_dpp(r#"{"rows":[[3,1]]}"#).unwrap();
        assert!(matches!(
            perm_from_dpp(&with_special, 3),
            Err(BijectionError::HasSpecialParts { count: 1 })
        ));
        let d = parse_dpp(r#"{"rows":[[3]]}"#).unwrap();
        assert!(matches!(
            perm_from_dpp(&d, 2),
            Err(BijectionError::DimensionTooSmall { m: 2, max_part: 3 })
        ));
    }
}
