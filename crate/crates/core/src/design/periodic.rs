use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::{bits_to_string, FiniteDesign, ThetaValue};
use crate::error::{Error, Result};

/// An eventually periodic design `preperiod (period)` in canonical form:
/// the period is primitive, mixes both bits, and the preperiod is as short
/// as rotation allows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicDesign {
    preperiod: Vec<bool>,
    period: Vec<bool>,
}

impl PeriodicDesign {
    /// Canonical representative of `pre (period)`.
    ///
    /// A constant period has a dyadic decimal and is rejected; callers that
    /// want the finite design should go through `design_of_theta`.
    pub fn canonical(mut pre: Vec<bool>, period: Vec<bool>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidPeriod("empty period".into()));
        }
        if period.iter().all(|&b| b) || period.iter().all(|&b| !b) {
            return Err(Error::InvalidPeriod(format!(
                "constant period {}",
                bits_to_string(&period)
            )));
        }
        let mut period = primitive_root(&period).to_vec();
        while let (Some(&p), Some(&q)) = (pre.last(), period.last()) {
            if p != q {
                break;
            }
            pre.pop();
            period.rotate_right(1);
        }
        Ok(PeriodicDesign {
            preperiod: pre,
            period,
        })
    }

    pub fn preperiod(&self) -> &[bool] {
        &self.preperiod
    }

    pub fn period(&self) -> &[bool] {
        &self.period
    }

    pub fn preperiod_design(&self) -> FiniteDesign {
        FiniteDesign::from_bits(self.preperiod.clone())
    }

    pub fn period_design(&self) -> FiniteDesign {
        FiniteDesign::from_bits(self.period.clone())
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.preperiod.is_empty()
    }

    /// The first `len` bits of the infinite word.
    pub fn prefix(&self, len: usize) -> Vec<bool> {
        self.preperiod
            .iter()
            .chain(self.period.iter().cycle())
            .take(len)
            .copied()
            .collect()
    }

    /// `((2^n - 1) m' + m'') / (2^k (2^n - 1))`.
    pub fn theta(&self) -> ThetaValue {
        let (m1, k) = self.preperiod_design().design_number();
        let (m2, n) = self.period_design().design_number();
        let cycle = (BigUint::one() << n) - 1u32;
        let num = &cycle * m1 + m2;
        let den = (BigUint::one() << k) * cycle;
        ThetaValue::new(num, den).expect("periodic decimal lies in (0, 1)")
    }

    /// Flips every bit.
    pub fn conjugate(&self) -> Self {
        PeriodicDesign {
            preperiod: self.preperiod.iter().map(|b| !b).collect(),
            period: self.period.iter().map(|b| !b).collect(),
        }
    }
}

fn primitive_root(word: &[bool]) -> &[bool] {
    let n = word.len();
    (1..=n)
        .filter(|p| n.is_multiple_of(*p))
        .map(|p| &word[..p])
        .find(|root| word.chunks(root.len()).all(|c| c == *root))
        .unwrap_or(word)
}

impl fmt::Display for PeriodicDesign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({})",
            bits_to_string(&self.preperiod),
            bits_to_string(&self.period)
        )
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    fn canon(pre: &str, per: &str) -> String {
        PeriodicDesign::canonical(bits(pre), bits(per))
            .unwrap()
            .to_string()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canon("1", "1001"), "(1100)");
        assert_eq!(canon("", "1010"), "(10)");
        assert_eq!(canon("0101", "01"), "(01)");
        assert_eq!(canon("11", "10"), "11(10)");
        assert_eq!(canon("1", "01"), "(10)");
        assert!(PeriodicDesign::canonical(vec![], bits("11")).is_err());
        assert!(PeriodicDesign::canonical(vec![], vec![]).is_err());
    }

    #[test]
    fn theta_is_rotation_invariant() {
        let a = PeriodicDesign::canonical(bits("1"), bits("1001")).unwrap();
        assert_eq!(a.theta().to_string(), "4/5");
        let raw_theta = ThetaValue::new(15u32 + 9, 30u32).unwrap();
        assert_eq!(a.theta(), raw_theta);
        let b = PeriodicDesign::canonical(vec![], bits("1001")).unwrap();
        assert_eq!(b.theta().to_string(), "3/5");
    }

    #[test]
    fn prefix_and_conjugate() {
        let p = PeriodicDesign::canonical(bits("0"), bits("10")).unwrap();
        assert_eq!(p.to_string(), "(01)");
        assert_eq!(p.prefix(5), bits("01010"));
        assert_eq!(p.conjugate().to_string(), "(10)");
    }
}
