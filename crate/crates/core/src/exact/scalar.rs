use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::ExactError;

/// Arbitrary-precision rational number.
///
/// Always held in reduced form with a positive denominator; every operation
/// is exact, nothing ever rounds.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar(BigRational::one())
    }

    /// Exact ratio `num/den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        ExactScalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        ExactScalar(BigRational::from_integer(n))
    }

    /// Exact ratio of big integers. Panics if `den == 0`.
    pub fn from_bigint_ratio(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        ExactScalar(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The underlying integer, if the denominator is 1.
    pub fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub(crate) fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub(crate) fn from_rational(r: BigRational) -> Self {
        ExactScalar(r)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for ExactScalar {
    fn from(n: BigInt) -> Self {
        ExactScalar::from_bigint(n)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactScalar({})", self)
    }
}

/// Accepts `p`, `p/q`, and decimal literals like `-2.75`.
impl FromStr for ExactScalar {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || ExactError::Parse { input: s.to_string() };
        if let Some((num, den)) = s.split_once('/') {
            let num = BigInt::from_str(num.trim()).map_err(|_| err())?;
            let den = BigInt::from_str(den.trim()).map_err(|_| err())?;
            if den.is_zero() {
                return Err(err());
            }
            return Ok(ExactScalar(BigRational::new(num, den)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let negative = int_part.trim_start().starts_with('-');
            let int_part = if int_part.is_empty() || int_part == "-" || int_part == "+" {
                BigInt::zero()
            } else {
                BigInt::from_str(int_part).map_err(|_| err())?
            };
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let frac = BigInt::from_str(frac_part).map_err(|_| err())?;
            let num = if negative { int_part * &scale - frac } else { int_part * &scale + frac };
            return Ok(ExactScalar(BigRational::new(num, scale)));
        }
        let n = BigInt::from_str(s).map_err(|_| err())?;
        Ok(ExactScalar::from_bigint(n))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar((self.0).$method(rhs.0))
            }
        }
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar((self.0).$method(&rhs.0))
            }
        }
        impl $trait<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form() {
        let x = ExactScalar::ratio(6, -8);
        assert_eq!(x.to_string(), "-3/4");
        assert_eq!(x.denom(), &BigInt::from(4));
    }

    #[test]
    fn display_integer_without_denominator() {
        assert_eq!(ExactScalar::ratio(14, 7).to_string(), "2");
        assert_eq!(ExactScalar::from(0).to_string(), "0");
    }

    #[test]
    fn parse_fraction_and_decimal() {
        assert_eq!("3/7".parse::<ExactScalar>().unwrap(), ExactScalar::ratio(3, 7));
        assert_eq!("-2.75".parse::<ExactScalar>().unwrap(), ExactScalar::ratio(-11, 4));
        assert_eq!("0.5".parse::<ExactScalar>().unwrap(), ExactScalar::ratio(1, 2));
        assert_eq!("  -9 ".parse::<ExactScalar>().unwrap(), ExactScalar::from(-9));
        assert!("1/0".parse::<ExactScalar>().is_err());
        assert!("a/b".parse::<ExactScalar>().is_err());
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = ExactScalar::ratio(1, 3);
        let b = ExactScalar::ratio(1, 6);
        assert_eq!(&a + &b, ExactScalar::ratio(1, 2));
        assert_eq!(&a - &b, ExactScalar::ratio(1, 6));
        assert_eq!(&a * &b, ExactScalar::ratio(1, 18));
        assert_eq!(&a / &b, ExactScalar::from(2));
        assert_eq!(-a, ExactScalar::ratio(-1, 3));
    }

    #[test]
    fn string_round_trip() {
        for s in ["0", "-17", "3/7", "-355/113", "12345678901234567890/7"] {
            let x: ExactScalar = s.parse().unwrap();
            assert_eq!(x.to_string().parse::<ExactScalar>().unwrap(), x);
        }
    }
}
