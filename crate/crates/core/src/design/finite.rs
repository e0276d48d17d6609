use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{bits_to_string, PeriodicDesign, RunLengths, ThetaValue};
use crate::error::{Error, Result};

/// A finite design `{m}_n`, or the terminal design `{2^n}_n` written `1 0^n τ`.
///
/// For a terminal design `bits` holds the `n` zeros that follow the leading
/// one, so `len()` is `n` in both cases.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FiniteDesign {
    bits: Vec<bool>,
    terminal: bool,
}

impl FiniteDesign {
    /// The empty design `ε = {0}_0`.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        FiniteDesign {
            bits,
            terminal: false,
        }
    }

    /// `{2^n}_n`.
    pub fn terminal(n: usize) -> Self {
        FiniteDesign {
            bits: vec![false; n],
            terminal: true,
        }
    }

    /// `{m}_n` for `0 <= m <= 2^n`; `m = 2^n` gives the terminal design.
    pub fn from_number(m: &BigUint, n: usize) -> Result<Self> {
        let width = BigUint::one() << n;
        if *m > width {
            return Err(Error::OutOfRange(format!("{m} exceeds 2^{n}")));
        }
        if *m == width {
            return Ok(Self::terminal(n));
        }
        let bits = (0..n).map(|i| m.bit((n - 1 - i) as u64)).collect();
        Ok(Self::from_bits(bits))
    }

    pub fn from_runs(ks: &RunLengths) -> Self {
        Self::from_bits(ks.to_bits())
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty() && !self.terminal
    }

    pub fn is_terminal(&self) -> bool {
        self.terminal
    }

    /// `(m, n)` with `m` the binary value of the word; `(2^n, n)` when terminal.
    pub fn design_number(&self) -> (BigUint, usize) {
        let n = self.bits.len();
        if self.terminal {
            return (BigUint::one() << n, n);
        }
        let mut m = BigUint::zero();
        for &b in &self.bits {
            m <<= 1u32;
            if b {
                m += 1u32;
            }
        }
        (m, n)
    }

    pub fn runs(&self) -> Result<RunLengths> {
        if self.terminal {
            return Err(Error::TerminalDesign);
        }
        Ok(RunLengths::of_bits(&self.bits))
    }

    /// `2^n - {m}_n`.
    pub fn conjugate(&self) -> Self {
        let (m, n) = self.design_number();
        let width = BigUint::one() << n;
        Self::from_number(&(width - m), n).expect("in range")
    }

    /// Bitwise complement `{2^n - (m+1)}_n`.
    pub fn complement(&self) -> Result<Self> {
        if self.terminal {
            return Err(Error::TerminalDesign);
        }
        Ok(Self::from_bits(self.bits.iter().map(|b| !b).collect()))
    }

    /// Reverses the run lengths.
    pub fn inverse(&self) -> Result<Self> {
        Ok(Self::from_runs(&self.runs()?.reversed()))
    }

    /// Word concatenation `D D'`, with the carry rule when `D'` is terminal.
    pub fn compose(&self, other: &FiniteDesign) -> Result<Self> {
        if self.terminal {
            return Err(Error::TerminalDesign);
        }
        if !other.terminal {
            let mut bits = self.bits.clone();
            bits.extend_from_slice(&other.bits);
            return Ok(Self::from_bits(bits));
        }
        // (D + 1) followed by n' zeros
        let (m, n) = self.design_number();
        let total = n + other.len();
        Self::from_number(&((m + 1u32) << other.len()), total)
    }

    pub fn compose_periodic(&self, other: &PeriodicDesign) -> Result<PeriodicDesign> {
        if self.terminal {
            return Err(Error::TerminalDesign);
        }
        let mut pre = self.bits.clone();
        pre.extend_from_slice(other.preperiod());
        PeriodicDesign::canonical(pre, other.period().to_vec())
    }

    /// Strips trailing zeros; `θ` is unchanged.
    pub fn reduce(&self) -> Self {
        if self.terminal {
            return Self::terminal(0);
        }
        let keep = self.bits.iter().rposition(|&b| b).map_or(0, |i| i + 1);
        Self::from_bits(self.bits[..keep].to_vec())
    }

    /// Odd design number; `ε` and `1τ` also count as reduced.
    pub fn is_reduced(&self) -> bool {
        if self.terminal {
            return self.bits.is_empty();
        }
        self.bits.is_empty() || *self.bits.last().unwrap()
    }

    /// Odd design number with a leading one.
    pub fn is_primitive(&self) -> bool {
        !self.terminal && self.bits.first() == Some(&true) && self.bits.last() == Some(&true)
    }

    pub fn theta(&self) -> ThetaValue {
        let (m, n) = self.design_number();
        ThetaValue::new(m, BigUint::one() << n).expect("m <= 2^n")
    }
}

impl fmt::Display for FiniteDesign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terminal {
            write!(f, "1{}t", bits_to_string(&self.bits))
        } else {
            f.write_str(&bits_to_string(&self.bits))
        }
    }
}
