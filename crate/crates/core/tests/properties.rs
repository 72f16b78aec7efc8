//! Property tests: serialization round-trips, single-part mutation fuzzing
//! against an independently written condition checker, and the signed
//! path-count determinant computed from the lattice itself.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use dppasm::dpp::{enumerate_dpps_jobs, serialize_dpp, validate_dpp, Dpp, DppError};
use dppasm::exact::{dpp_det, ExactMatrix, ExactScalar};
use dppasm::lattice::build_lattice;

fn corpus(m: usize) -> &'static [Dpp] {
    static CORPORA: OnceLock<Vec<Vec<Dpp>>> = OnceLock::new();
    let all = CORPORA.get_or_init(|| {
        (0..=5).map(|m| if m < 1 { Vec::new() } else { enumerate_dpps_jobs(m, 1) }).collect()
    });
    &all[m]
}

/// Re-derivation of the defining conditions, written directly against the
/// published statement and kept independent of the library validator.
fn violated_conditions(rows: &[Vec<i64>]) -> BTreeSet<&'static str> {
    let mut out = BTreeSet::new();
    for (i0, row) in rows.iter().enumerate() {
        if row.is_empty() {
            out.insert("empty-row");
            continue;
        }
        if row.iter().any(|&v| v <= 0) {
            out.insert("positivity");
        }
        if row.windows(2).any(|w| w[0] < w[1]) {
            out.insert("1");
        }
        // length of row i is mu_i - i + 1; condition 3: a_{i,i} > mu_i - i + 1
        if row[0] <= row.len() as i64 {
            out.insert("A");
        }
        if i0 > 0 && !rows[i0 - 1].is_empty() {
            // condition 4: a_{i,i} <= mu_{i-1} - (i - 1) + 1
            if row[0] > rows[i0 - 1].len() as i64 {
                out.insert("B");
            }
            // condition 2 on shared columns: absolute column of cur[t0] is
            // (i0 + 1) + t0, which the previous row holds at index t0 + 1
            for (t0, &v) in row.iter().enumerate() {
                if let Some(&a) = rows[i0 - 1].get(t0 + 1) {
                    if a <= v {
                        out.insert("2");
                    }
                }
            }
        }
    }
    out
}

fn reported_labels(err: &DppError) -> BTreeSet<&'static str> {
    match err {
        DppError::Invalid(vs) => vs.iter().map(|v| v.condition.label()).collect(),
        other => panic!("unexpected error {other:?}"),
    }
}

proptest! {
    /// Mutating any single part of a valid partition either stays valid or is
    /// rejected with exactly the genuinely violated condition labels.
    #[test]
    fn single_part_mutation_is_diagnosed_correctly(
        m in 2usize..=5,
        pick in any::<prop::sample::Index>(),
        cell in any::<prop::sample::Index>(),
        delta in prop_oneof![Just(-3i64), Just(-2), Just(-1), Just(1), Just(2), Just(3)],
    ) {
        let all = corpus(m);
        let d = &all[pick.index(all.len())];
        prop_assume!(!d.is_empty());
        let mut rows: Vec<Vec<i64>> =
            d.rows().iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
        let flat: usize = rows.iter().map(Vec::len).sum();
        let target = cell.index(flat);
        let mut seen = 0usize;
        'outer: for row in rows.iter_mut() {
            for v in row.iter_mut() {
                if seen == target {
                    *v += delta;
                    break 'outer;
                }
                seen += 1;
            }
        }
        let expected = violated_conditions(&rows);
        match validate_dpp(&rows) {
            Ok(_) => prop_assert!(expected.is_empty(), "validator accepted {rows:?} violating {expected:?}"),
            Err(err) => {
                prop_assert_eq!(reported_labels(&err), expected, "on {:?}", rows);
            }
        }
    }

    /// The fraction string serialization of exact scalars is lossless.
    #[test]
    fn scalar_string_round_trip(num in any::<i64>(), den in any::<i64>().prop_filter("nonzero", |d| *d != 0)) {
        let x = ExactScalar::ratio(num, den);
        let back: ExactScalar = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    /// Arithmetic results round-trip through serialization as well.
    #[test]
    fn scalar_arithmetic_round_trip(
        a in -10_000i64..10_000, b in 1i64..500,
        c in -10_000i64..10_000, d in 1i64..500,
    ) {
        let x = ExactScalar::ratio(a, b);
        let y = ExactScalar::ratio(c, d);
        for value in [&x + &y, &x - &y, &x * &y] {
            let back: ExactScalar = value.to_string().parse().unwrap();
            prop_assert_eq!(back, value);
        }
        if !y.is_zero() {
            let q = &x / &y;
            prop_assert_eq!(q.to_string().parse::<ExactScalar>().unwrap(), q);
        }
    }

    /// Parsing accepts decimals and reduces to canonical form.
    #[test]
    fn scalar_decimal_parse(int_part in -1000i64..1000, frac in 0u32..1000) {
        let text = format!("{int_part}.{frac:03}");
        let parsed: ExactScalar = text.parse().unwrap();
        let sign = if int_part < 0 { -1 } else { 1 };
        let expected = ExactScalar::ratio(int_part * 1000 + sign * frac as i64, 1000);
        prop_assert_eq!(parsed, expected);
    }
}

/// The determinant of the signed path-count matrix, with every entry taken
/// from the lattice DFS rather than the closed form, counts the partitions.
#[test]
fn signed_path_count_determinant_counts_partitions() {
    for m in 2..=7usize {
        let lattice = build_lattice(m).unwrap();
        let matrix = ExactMatrix::from_fn(m - 1, |i0, j0| {
            ExactScalar::from(lattice.weighted_count(i0 + 1, j0 + 1).unwrap())
        });
        assert_eq!(matrix.det().to_bigint().unwrap(), dpp_det(m), "m={m}");
    }
    // m = 1: the empty determinant is 1, matching the single empty partition
    assert_eq!(dpp_det(1), 1u32.into());
}

/// Serialization is canonical across the whole m=4 corpus.
#[test]
fn corpus_serialization_round_trip() {
    for d in corpus(4) {
        let json = serialize_dpp(d);
        assert_eq!(&dppasm::dpp::parse_dpp(&json).unwrap(), d);
    }
}
