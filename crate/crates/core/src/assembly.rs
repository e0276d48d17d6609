//! The assembly function `𝒜(m/2^n) = [2^n:m] / [2^n:2^n-m]` and its extension
//! to rational and periodic decimals.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::design::{design_of_theta, euclidean_design, Design, FiniteDesign, ThetaValue};
use crate::error::{Error, Result};
use crate::matrix::{apply_mobius, sdm};
use crate::quadratic::{quad_of_periodic, QuadIrr};
use crate::rational::ExtRational;
use crate::sdi::stern;

/// `𝒜(m / 2^n)` for `0 ≤ m ≤ 2^n`; `𝒜(1) = ∞`.
pub fn assembly_dyadic(m: &BigUint, n: usize) -> Result<ExtRational> {
    let width = BigUint::one() << n;
    if *m > width {
        return Err(Error::OutOfRange(format!("{m}/2^{n} exceeds 1")));
    }
    Ok(ExtRational::new(stern(m), stern(&(width - m))).expect("coprime, never 0/0"))
}

/// `𝒜(θ)` for a dyadic `θ`.
pub fn assembly_at(t: &ThetaValue) -> Result<ExtRational> {
    let (m, n) = t
        .dyadic_parts()
        .ok_or_else(|| Error::OutOfRange(format!("{t} is not dyadic")))?;
    assembly_dyadic(&m, n)
}

/// The reduced design `D` with `𝒜(θ_D) = v`.
pub fn assembly_inverse(v: &ExtRational) -> FiniteDesign {
    if v.is_zero() {
        return FiniteDesign::empty();
    }
    if v.is_infinite() {
        return FiniteDesign::terminal(0);
    }
    euclidean_design(v.numer(), v.denom()).expect("reduced fraction")
}

/// `[𝒜(θ_n), 𝒜(θ_n + 2^{-n})]` for the `n`-bit truncation `θ_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: ExtRational,
    pub hi: ExtRational,
    pub bits_used: usize,
}

impl Enclosure {
    /// `hi - lo` when both ends are finite.
    pub fn width(&self) -> Option<ExtRational> {
        if self.hi.is_infinite() {
            return None;
        }
        let num = self.hi.numer() * self.lo.denom() - self.lo.numer() * self.hi.denom();
        Some(ExtRational::new(num, self.hi.denom() * self.lo.denom()).expect("finite"))
    }
}

pub fn assembly_enclose(bits: &[bool], n: usize) -> Result<Enclosure> {
    if bits.len() < n {
        return Err(Error::InsufficientBits {
            needed: n,
            got: bits.len(),
        });
    }
    let (m, _) = FiniteDesign::from_bits(bits[..n].to_vec()).design_number();
    Ok(Enclosure {
        lo: assembly_dyadic(&m, n)?,
        hi: assembly_dyadic(&(m + 1u32), n)?,
        bits_used: n,
    })
}

/// A value of `𝒜` at a rational decimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AssemblyValue {
    Rational(ExtRational),
    Quadratic(QuadIrr),
}

impl fmt::Display for AssemblyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AssemblyValue::Rational(v) => v.fmt(f),
            AssemblyValue::Quadratic(q) => write!(f, "root of {} ({})", q, q.value()),
        }
    }
}

/// `𝒜(θ)`: exact for dyadic `θ`, a quadratic irrational otherwise.
pub fn assembly_of_rational_theta(t: &ThetaValue) -> Result<AssemblyValue> {
    match design_of_theta(t) {
        Design::Finite(_) => assembly_at(t).map(AssemblyValue::Rational),
        Design::Periodic(p) => quad_of_periodic(&p).map(AssemblyValue::Quadratic),
    }
}

/// `(𝒜(1 - θ), 1/𝒜(θ))` for dyadic `θ`.
pub fn reflection(t: &ThetaValue) -> Result<(ExtRational, ExtRational)> {
    Ok((assembly_at(&t.reflect())?, assembly_at(t)?.recip()))
}

/// `U(D) · v`, which equals `𝒜(θ_{DD'})` when `v = 𝒜(θ_{D'})`.
pub fn compose_action(d: &FiniteDesign, v: &ExtRational) -> Result<ExtRational> {
    Ok(apply_mobius(&sdm(d)?, v))
}

/// `?^{-1}(θ) = 𝒜(θ) / (𝒜(θ) + 1)` on dyadic `θ`.
pub fn question_mark_inverse(t: &ThetaValue) -> Result<ExtRational> {
    let a = assembly_at(t)?;
    if a.is_infinite() {
        return Ok(ExtRational::one());
    }
    Ok(ExtRational::new(a.numer().clone(), a.numer() + a.denom()).expect("positive denominator"))
}

/// Samples `(θ, 𝒜(θ))` at `θ = m/2^k` for `m = 0..2^k`.
pub fn sample_grid(k: usize) -> Vec<(ThetaValue, ExtRational)> {
    let width = BigUint::one() << k;
    let mut out = Vec::new();
    let mut m = BigUint::zero();
    while m < width {
        let t = ThetaValue::new(m.clone(), width.clone()).expect("in range");
        let v = assembly_dyadic(&m, k).expect("in range");
        out.push((t, v));
        m += 1u32;
    }
    out
}
