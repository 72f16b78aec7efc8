//! Binomials, rising factorials, and the determinant/product formulas that
//! count descending plane partitions.

use num::bigint::BigInt;
use num::{One, Zero};

use super::{ExactError, ExactMatrix, ExactScalar};

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=n {
        acc *= t;
    }
    acc
}

/// `C(n, k)` over the integers; zero for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Generalized binomial `C(y, k) = y(y-1)...(y-k+1)/k!` for rational `y`.
pub fn general_binomial(y: &ExactScalar, k: usize) -> ExactScalar {
    let mut num = ExactScalar::one();
    for t in 0..k {
        num = num * (y - &ExactScalar::from(t as i64));
    }
    num / ExactScalar::from_bigint(factorial(k as u64))
}

/// Rising factorial `(x)_j = x(x+1)...(x+j-1)`; the empty product is 1.
pub fn rising(x: &ExactScalar, j: usize) -> ExactScalar {
    let mut acc = ExactScalar::one();
    for t in 0..j {
        acc = acc * (x + &ExactScalar::from(t as i64));
    }
    acc
}

/// Number of descending plane partitions of dimension `m`, as the
/// determinant of the weighted path-count matrix
/// `C(i+j-1, j-1) + [i=j] - [i+1=j]` over `1 <= i, j <= m-1`.
pub fn dpp_det(m: usize) -> BigInt {
    assert!(m >= 1, "dimension must be at least 1");
    let n = m - 1;
    let matrix = ExactMatrix::from_fn(n, |i0, j0| {
        let (i, j) = (i0 as u64 + 1, j0 as u64 + 1);
        let mut e = binomial(i + j - 1, j as i64 - 1);
        if i == j {
            e += 1;
        }
        if i + 1 == j {
            e -= 1;
        }
        ExactScalar::from_bigint(e)
    });
    matrix.det().to_bigint().expect("integer matrix has integer determinant")
}

/// Andrews' determinant `a_n(x) = det(C(x+i+j, j) + [i=j])` over
/// `0 <= i, j <= n-1`.
pub fn andrews_a(n: usize, x: &ExactScalar) -> ExactScalar {
    ExactMatrix::from_fn(n, |i, j| {
        let y = x + &ExactScalar::from((i + j) as i64);
        let mut e = general_binomial(&y, j);
        if i == j {
            e = e + ExactScalar::one();
        }
        e
    })
    .det()
}

/// The companion determinant `d_n(x) = det(C(x+i+j, j) + [i=j] - [i+1=j])`,
/// which equals `a_n(x+1)` for all `n > 0`.
pub fn andrews_d(n: usize, x: &ExactScalar) -> ExactScalar {
    let d = ExactMatrix::from_fn(n, |i, j| {
        let y = x + &ExactScalar::from((i + j) as i64);
        let mut e = general_binomial(&y, j);
        if i == j {
            e = e + ExactScalar::one();
        }
        if i + 1 == j {
            e = e - ExactScalar::one();
        }
        e
    })
    .det();
    debug_assert!(
        n == 0 || d == andrews_a(n, &(x + &ExactScalar::one())),
        "d_n(x) must equal a_n(x+1)"
    );
    d
}

/// One factor of the product form of Andrews' determinant. `delta(0, x) = 2`;
/// higher factors are ratios of rising factorials and can hit a zero
/// denominator at isolated rational `x`, which is reported as an error.
pub fn delta(k: usize, x: &ExactScalar) -> Result<ExactScalar, ExactError> {
    if k == 0 {
        return Ok(ExactScalar::from(2));
    }
    let x_half = x / &ExactScalar::from(2);
    let (num_parts, den_parts): (Vec<(ExactScalar, usize, String)>, Vec<(ExactScalar, usize, String)>);
    if k % 2 == 0 {
        let j = k / 2;
        num_parts = vec![
            (x + &ExactScalar::from(2 * j as i64 + 2), j, format!("(x+{})_{}", 2 * j + 2, j)),
            (
                &x_half + &ExactScalar::ratio(4 * j as i64 + 3, 2),
                j - 1,
                format!("(x/2+{}/2)_{}", 4 * j + 3, j - 1),
            ),
        ];
        den_parts = vec![
            (ExactScalar::from(j as i64), j, format!("({})_{}", j, j)),
            (
                &x_half + &ExactScalar::ratio(2 * j as i64 + 3, 2),
                j - 1,
                format!("(x/2+{}/2)_{}", 2 * j + 3, j - 1),
            ),
        ];
    } else {
        let j = (k + 1) / 2;
        num_parts = vec![
            (x + &ExactScalar::from(2 * j as i64), j - 1, format!("(x+{})_{}", 2 * j, j - 1)),
            (
                &x_half + &ExactScalar::ratio(4 * j as i64 + 1, 2),
                j,
                format!("(x/2+{}/2)_{}", 4 * j + 1, j),
            ),
        ];
        den_parts = vec![
            (ExactScalar::from(j as i64), j, format!("({})_{}", j, j)),
            (
                &x_half + &ExactScalar::ratio(2 * j as i64 + 1, 2),
                j - 1,
                format!("(x/2+{}/2)_{}", 2 * j + 1, j - 1),
            ),
        ];
    }
    let mut den = ExactScalar::one();
    for (base, len, name) in &den_parts {
        let factor = rising(base, *len);
        if factor.is_zero() {
            return Err(ExactError::DeltaDenominatorZero {
                k,
                x: x.to_string(),
                factor: name.clone(),
            });
        }
        den = den * factor;
    }
    let mut num = ExactScalar::one();
    for (base, len, _) in &num_parts {
        num = num * rising(base, *len);
    }
    Ok(num / den)
}

/// Product form of Andrews' determinant: `prod_{k=0}^{n-1} delta(k, x)`.
pub fn andrews_product(n: usize, x: &ExactScalar) -> Result<ExactScalar, ExactError> {
    let mut acc = ExactScalar::one();
    for k in 0..n {
        acc = acc * delta(k, x)?;
    }
    Ok(acc)
}

/// Number of descending plane partitions of dimension `m` as the product
/// `prod_{k=0}^{m-1} (3k+1)! / ((2k+1)! (k+1)_k)`.
pub fn dpp_count_product(m: usize) -> BigInt {
    assert!(m >= 1, "dimension must be at least 1");
    let mut acc = ExactScalar::one();
    for k in 0..m as u64 {
        let term = ExactScalar::from_bigint(factorial(3 * k + 1))
            / (ExactScalar::from_bigint(factorial(2 * k + 1))
                * rising(&ExactScalar::from(k as i64 + 1), k as usize));
        acc = acc * term;
    }
    assert!(acc.is_integer() && !acc.is_negative(), "product must be a positive integer");
    acc.to_bigint().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> ExactScalar {
        ExactScalar::from(v)
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(6, 3), BigInt::from(20));
    }

    #[test]
    fn rising_empty_product_is_one() {
        assert_eq!(rising(&ExactScalar::ratio(-7, 3), 0), ExactScalar::one());
    }

    #[test]
    fn rising_three_two() {
        assert_eq!(rising(&s(3), 2), s(12));
    }

    #[test]
    fn general_binomial_half_integer() {
        // C(5/2, 2) = (5/2)(3/2)/2 = 15/8
        assert_eq!(general_binomial(&ExactScalar::ratio(5, 2), 2), ExactScalar::ratio(15, 8));
    }

    #[test]
    fn general_binomial_matches_integer_binomial() {
        for n in 0..8u64 {
            for k in 0..8usize {
                assert_eq!(
                    general_binomial(&s(n as i64), k),
                    ExactScalar::from_bigint(binomial(n, k as i64)),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn dpp_det_small_values() {
        assert_eq!(dpp_det(1), BigInt::one()); // order-0 determinant
        assert_eq!(dpp_det(2), BigInt::from(2));
        assert_eq!(dpp_det(3), BigInt::from(7)); // 2*4 - 1*1
        assert_eq!(dpp_det(6), BigInt::from(7436));
    }

    #[test]
    fn dpp_det_sequence_through_ten() {
        let expected: [i64; 10] =
            [1, 2, 7, 42, 429, 7436, 218348, 10850216, 911835460, 129534272700];
        for (m, want) in (1..=10).zip(expected) {
            assert_eq!(dpp_det(m), BigInt::from(want), "m={m}");
        }
    }

    #[test]
    fn andrews_a_one_is_two() {
        for x in [s(0), s(1), s(-3), ExactScalar::ratio(1, 2)] {
            assert_eq!(andrews_a(1, &x), s(2));
        }
    }

    #[test]
    fn andrews_d_matches_dpp_det() {
        for m in 2..=7usize {
            assert_eq!(andrews_d(m - 1, &s(1)).to_bigint().unwrap(), dpp_det(m), "m={m}");
        }
    }

    #[test]
    fn andrews_a_at_two_counts_dpps() {
        for m in 1..=7usize {
            assert_eq!(andrews_a(m - 1, &s(2)).to_bigint().unwrap(), dpp_det(m), "m={m}");
        }
    }

    #[test]
    fn delta_zero_is_two() {
        for x in [s(0), s(5), ExactScalar::ratio(-3, 7)] {
            assert_eq!(delta(0, &x).unwrap(), s(2));
        }
    }

    #[test]
    fn delta_one_at_two() {
        // 7!/(5! * (3)_2) = 5040/1440
        assert_eq!(delta(1, &s(2)).unwrap(), ExactScalar::ratio(7, 2));
    }

    #[test]
    fn delta_values_at_two_match_factorial_ratio() {
        // delta(k-1, 2) = (3k+1)! / ((2k+1)! (k+1)_k)
        for k in 1..=6u64 {
            let want = ExactScalar::from_bigint(factorial(3 * k + 1))
                / (ExactScalar::from_bigint(factorial(2 * k + 1))
                    * rising(&s(k as i64 + 1), k as usize));
            assert_eq!(delta(k as usize - 1, &s(2)).unwrap(), want, "k={k}");
        }
    }

    #[test]
    fn delta_denominator_zero_is_reported() {
        // delta(3, x) has denominator factor (x/2 + 5/2)_1, zero at x = -5
        let err = delta(3, &s(-5)).unwrap_err();
        match err {
            ExactError::DeltaDenominatorZero { k, ref factor, .. } => {
                assert_eq!(k, 3);
                assert!(factor.contains("5/2"), "factor was {factor}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn product_matches_determinant() {
        for n in 0..=6usize {
            for x in [s(0), s(1), s(2), s(3), ExactScalar::ratio(1, 2)] {
                assert_eq!(andrews_product(n, &x).unwrap(), andrews_a(n, &x), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn dpp_count_product_small_values() {
        assert_eq!(dpp_count_product(1), BigInt::one());
        assert_eq!(dpp_count_product(3), BigInt::from(7)); // 1 * 2 * 7/2
        assert_eq!(dpp_count_product(7), BigInt::from(218348));
    }

    #[test]
    fn product_agrees_with_determinant_through_ten() {
        for m in 1..=10usize {
            assert_eq!(dpp_count_product(m), dpp_det(m), "m={m}");
        }
    }
}
