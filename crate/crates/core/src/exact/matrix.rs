use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use super::{ExactError, ExactScalar};

/// Square matrix of exact rationals with an explicit order `n`.
///
/// The order-0 matrix is allowed; its determinant is 1.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> ExactScalar) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Result<Self, ExactError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(ExactError::NotSquare { row: i + 1, len: row.len(), expected: n });
            }
        }
        Ok(ExactMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { ExactScalar::one() } else { ExactScalar::zero() })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.entries[i * self.n + j]
    }

    /// Exact determinant.
    ///
    /// Integer matrices go through fraction-free (Bareiss) elimination, which
    /// keeps all intermediates integral; rational matrices use exact Gaussian
    /// elimination pivoting on the first nonzero entry of each column.
    pub fn det(&self) -> ExactScalar {
        if self.n == 0 {
            return ExactScalar::one();
        }
        if self.entries.iter().all(|e| e.is_integer()) {
            let grid: Vec<Vec<BigInt>> = (0..self.n)
                .map(|i| (0..self.n).map(|j| self.get(i, j).numer().clone()).collect())
                .collect();
            ExactScalar::from_bigint(bareiss_det(grid))
        } else {
            let grid: Vec<Vec<BigRational>> = (0..self.n)
                .map(|i| (0..self.n).map(|j| self.get(i, j).as_rational().clone()).collect())
                .collect();
            ExactScalar::from_rational(gaussian_det(grid))
        }
    }
}

impl std::fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ExactMatrix(order {})", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Fraction-free elimination; every division below is exact.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 { -d } else { d }
}

fn gaussian_det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for k in 0..n {
        let pivot_row = match (k..n).find(|&r| !a[r][k].is_zero()) {
            Some(r) => r,
            None => return BigRational::zero(),
        };
        if pivot_row != k {
            a.swap(k, pivot_row);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for j in k..n {
                let sub = &factor * &a[k][j];
                a[i][j] -= sub;
            }
        }
    }
    det
}

#[cfg(test)]
pub(crate) fn cofactor_det(m: &ExactMatrix) -> ExactScalar {
    fn go(n: usize, rows: &[usize], cols: &[usize], m: &ExactMatrix) -> ExactScalar {
        if n == 0 {
            return ExactScalar::one();
        }
        let mut acc = ExactScalar::zero();
        let r = rows[0];
        for (idx, &c) in cols.iter().enumerate() {
            let sub_cols: Vec<usize> =
                cols.iter().copied().filter(|&x| x != c).collect();
            let term = m.get(r, c) * &go(n - 1, &rows[1..], &sub_cols, m);
            if idx % 2 == 0 {
                acc = acc + term;
            } else {
                acc = acc - term;
            }
        }
        acc
    }
    let n = m.order();
    let idx: Vec<usize> = (0..n).collect();
    go(n, &idx, &idx, m)
}
