//! Exact rationals. Canonical form (positive denominator, reduced) is
//! maintained by [`num_rational::BigRational`].

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `(-1)^e` as a rational.
pub fn sign(e: u32) -> Rational {
    if e.is_multiple_of(2) {
        one()
    } else {
        -one()
    }
}

/// Renders `a` or `a/b`.
pub fn render(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Lossless wire form: decimal strings for numerator and denominator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireRational {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for WireRational {
    fn from(q: &Rational) -> Self {
        WireRational {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }
}

impl WireRational {
    pub fn to_rational(&self) -> Option<Rational> {
        let num: BigInt = self.num.parse().ok()?;
        let den: BigInt = self.den.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Rational::new(num, den))
    }
}
