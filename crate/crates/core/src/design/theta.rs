use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use super::{Design, FiniteDesign, PeriodicDesign};
use crate::error::{Error, Result};
use crate::rational::parse_fraction;

/// A rational binary decimal in `[0, 1]`, kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThetaValue {
    num: BigUint,
    den: BigUint,
}

impl ThetaValue {
    pub fn new(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::OutOfRange("zero denominator".into()));
        }
        if num > den {
            return Err(Error::OutOfRange(format!("{num}/{den} exceeds 1")));
        }
        let g = num.gcd(&den);
        Ok(ThetaValue {
            num: num / &g,
            den: den / g,
        })
    }

    pub fn numer(&self) -> &BigUint {
        &self.num
    }

    pub fn denom(&self) -> &BigUint {
        &self.den
    }

    /// Denominator is a power of two.
    pub fn is_dyadic(&self) -> bool {
        self.den.count_ones() == 1
    }

    /// `(m, n)` with `θ = m / 2^n` and `m` odd (or `θ ∈ {0, 1}` with `n = 0`).
    pub fn dyadic_parts(&self) -> Option<(BigUint, usize)> {
        if !self.is_dyadic() {
            return None;
        }
        let n = self.den.trailing_zeros().unwrap_or(0) as usize;
        Some((self.num.clone(), n))
    }

    /// `1 - θ`.
    pub fn reflect(&self) -> Self {
        ThetaValue::new(&self.den - &self.num, self.den.clone()).expect("in range")
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }
}

impl fmt::Display for ThetaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for ThetaValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, d) = parse_fraction(s)?;
        ThetaValue::new(n, d)
    }
}

/// The design whose decimal is `t`: the reduced finite design for dyadic
/// values, `1τ` for one, and the canonical periodic design otherwise.
pub fn design_of_theta(t: &ThetaValue) -> Design {
    if t.is_one() {
        return FiniteDesign::terminal(0).into();
    }
    if let Some((m, n)) = t.dyadic_parts() {
        let d = FiniteDesign::from_number(&m, n).expect("m < 2^n");
        return d.reduce().into();
    }
    // Long division in base 2; the remainder sequence is eventually periodic.
    let den = t.denom();
    let mut seen: HashMap<BigUint, usize> = HashMap::new();
    let mut bits = Vec::new();
    let mut r = t.numer().clone();
    loop {
        if let Some(&start) = seen.get(&r) {
            let period = bits.split_off(start);
            return PeriodicDesign::canonical(bits, period)
                .expect("non-dyadic remainder cycle")
                .into();
        }
        seen.insert(r.clone(), bits.len());
        r <<= 1u32;
        if r >= *den {
            r -= den;
            bits.push(true);
        } else {
            bits.push(false);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn th(s: &str) -> ThetaValue {
        s.parse().unwrap()
    }

    #[test]
    fn reduces_and_validates() {
        assert_eq!(th("10/16").to_string(), "5/8");
        assert!(ThetaValue::new(3u32, 2u32).is_err());
        assert!(ThetaValue::new(0u32, 0u32).is_err());
        assert!(th("3/8").is_dyadic());
        assert!(!th("1/3").is_dyadic());
        assert!(th("0/1").is_dyadic());
    }

    #[test]
    fn designs_of_values() {
        let cases = [
            ("5/8", "101"),
            ("2/3", "(10)"),
            ("3/5", "(1001)"),
            ("1/1", "1t"),
            ("0/1", ""),
            ("1/3", "(01)"),
            ("5/6", "1(10)"),
            ("1/2", "1"),
        ];
        for (t, d) in cases {
            assert_eq!(design_of_theta(&th(t)).to_string(), d, "{t}");
        }
    }
}
