//! Nonnegative rationals extended with the point at infinity `1/0`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A reduced nonnegative fraction `num/den`, where `den == 0` encodes `∞ = 1/0`.
///
/// `0/0` is never constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtRational {
    num: BigUint,
    den: BigUint,
}

impl ExtRational {
    pub fn new(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::Indeterminate);
        }
        if den.is_zero() {
            return Ok(Self::infinity());
        }
        let g = num.gcd(&den);
        Ok(ExtRational {
            num: num / &g,
            den: den / g,
        })
    }

    pub fn integer(n: impl Into<BigUint>) -> Self {
        ExtRational {
            num: n.into(),
            den: BigUint::one(),
        }
    }

    pub fn zero() -> Self {
        Self::integer(0u32)
    }

    pub fn one() -> Self {
        Self::integer(1u32)
    }

    pub fn infinity() -> Self {
        ExtRational {
            num: BigUint::one(),
            den: BigUint::zero(),
        }
    }

    pub fn numer(&self) -> &BigUint {
        &self.num
    }

    pub fn denom(&self) -> &BigUint {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `1/x` with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Self {
        ExtRational {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    /// `k + x`; `k + ∞ = ∞`.
    pub fn add_integer(&self, k: &BigUint) -> Self {
        if self.is_infinite() {
            return self.clone();
        }
        ExtRational {
            num: &self.num + k * &self.den,
            den: self.den.clone(),
        }
    }

    /// Product; `0 · ∞` is rejected.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if (self.is_zero() && other.is_infinite()) || (self.is_infinite() && other.is_zero()) {
            return Err(Error::Indeterminate);
        }
        if self.is_infinite() || other.is_infinite() {
            return Ok(Self::infinity());
        }
        Self::new(&self.num * &other.num, &self.den * &other.den)
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Accepts `a`, `a/b` and `inf`.
impl FromStr for ExtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Self::infinity());
        }
        let (n, d) = parse_fraction(s)?;
        Self::new(n, d)
    }
}

/// Parses `a` or `a/b` with decimal digits, without reducing.
pub fn parse_fraction(s: &str) -> Result<(BigUint, BigUint)> {
    let digits = |t: &str| -> Result<BigUint> {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Syntax(format!("expected decimal digits, got {t:?}")));
        }
        Ok(t.parse().expect("digits"))
    };
    match s.split_once('/') {
        Some((a, b)) => Ok((digits(a)?, digits(b)?)),
        None => Ok((digits(s)?, BigUint::one())),
    }
}
