//! Difference quotients of `𝒜` at rational points.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::assembly::assembly_at;
use crate::continuant::continuant;
use crate::design::{design_of_theta, Design, FiniteDesign, ThetaValue};
use crate::error::{Error, Result};
use crate::matrix::sdm;
use crate::quadratic::{quad_of_periodic, QuadSurd};
use crate::rational::ExtRational;

/// `b_m = [1, 1, …, 1]` (`m` ones): 1, 2, 3, 5, 8, …
pub fn fib_continuant(m: u64) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::ZeroLength);
    }
    Ok(continuant(&vec![1; m as usize]))
}

/// Checks `((1 + √5)/2)^{m-2} < b_m` exactly in `Q(√5)`.
pub fn golden_bound_holds(m: u64) -> Result<bool> {
    let b = fib_continuant(m)?;
    let five = BigUint::from(5u32);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let phi = QuadSurd::new(half.clone(), half, five.clone());
    let mut power = if m == 1 { phi.recip() } else { QuadSurd::from_integer(1, &five) };
    for _ in 2..m {
        power = &power * &phi;
    }
    Ok(power < QuadSurd::from_integer(BigInt::from(b), &five))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(Error::Syntax(format!("side must be left or right, got {other:?}"))),
        }
    }
}

/// A difference quotient: rational at dyadic points, in `Q(√d)` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Quotient {
    Rational(BigRational),
    Surd(QuadSurd),
}

impl Quotient {
    /// Exact comparison with a rational bound.
    pub fn cmp_rational(&self, bound: &BigRational) -> Ordering {
        match self {
            Quotient::Rational(q) => q.cmp(bound),
            Quotient::Surd(s) => s.cmp(&QuadSurd::from_rational(bound.clone(), s.radicand())),
        }
    }
}

impl fmt::Display for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quotient::Rational(q) => q.fmt(f),
            Quotient::Surd(s) => s.fmt(f),
        }
    }
}

/// Quotients `±(𝒜(η ± 2^{-j}) - 𝒜(η)) · 2^j` for `j = 1..=jmax`, skipping
/// the `j` for which `η ± 2^{-j}` leaves `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientScan {
    pub eta: ThetaValue,
    pub side: Side,
    pub samples: Vec<(u32, Quotient)>,
}

fn check_interior(eta: &ThetaValue) -> Result<()> {
    if eta.is_zero() || eta.is_one() {
        return Err(Error::OutOfRange(format!("{eta} is not inside (0, 1)")));
    }
    Ok(())
}

fn to_big_rational(x: &ExtRational) -> BigRational {
    BigRational::new(x.numer().clone().into(), x.denom().clone().into())
}

fn as_rational(t: &ThetaValue) -> BigRational {
    BigRational::new(t.numer().clone().into(), t.denom().clone().into())
}

fn shifted(eta: &ThetaValue, side: Side, j: u32) -> Option<BigRational> {
    let h = BigRational::new(BigInt::one(), BigInt::one() << j);
    let x = match side {
        Side::Right => as_rational(eta) + h,
        Side::Left => as_rational(eta) - h,
    };
    (x > BigRational::zero() && x < BigRational::one()).then_some(x)
}

/// The quotient at `h = 2^{-j}` on one side, or `None` outside `(0, 1)`.
pub fn quotient_at(eta: &ThetaValue, side: Side, j: u32) -> Result<Option<Quotient>> {
    check_interior(eta)?;
    let Some(x) = shifted(eta, side, j) else {
        return Ok(None);
    };
    let scale = BigRational::from_integer(BigInt::one() << j);
    let oriented = |diff: BigRational| match side {
        Side::Right => diff * &scale,
        Side::Left => -diff * &scale,
    };
    if eta.is_dyadic() {
        let other = ThetaValue::new(
            x.numer().to_biguint().expect("positive"),
            x.denom().to_biguint().expect("positive"),
        )?;
        let diff = to_big_rational(&assembly_at(&other)?) - to_big_rational(&assembly_at(eta)?);
        return Ok(Some(Quotient::Rational(oriented(diff))));
    }
    let Design::Periodic(p) = design_of_theta(eta) else {
        unreachable!("non-dyadic decimals are periodic")
    };
    let omega = quad_of_periodic(&p)?.value();
    // η = θ_{G T} with |G| = j, and η ± 2^{-j} = θ_{F T} with F = G ± 1
    let g = FiniteDesign::from_bits(p.prefix(j as usize));
    let (gm, _) = g.design_number();
    let fm = match side {
        Side::Right => gm + 1u32,
        Side::Left => gm - 1u32,
    };
    let f = FiniteDesign::from_number(&fm, j as usize)?;
    let tail = omega.mobius(&sdm(&g)?.to_signed().unimodular_inverse());
    let moved = tail.mobius(&sdm(&f)?.to_signed());
    let k = QuadSurd::from_rational(oriented(BigRational::one()), omega.radicand());
    Ok(Some(Quotient::Surd(&(&moved - &omega) * &k)))
}

pub fn quotient_scan(eta: &ThetaValue, side: Side, jmax: u32) -> Result<QuotientScan> {
    check_interior(eta)?;
    let mut samples = Vec::new();
    for j in 1..=jmax {
        if let Some(q) = quotient_at(eta, side, j)? {
            samples.push((j, q));
        }
    }
    Ok(QuotientScan {
        eta: eta.clone(),
        side,
        samples,
    })
}

/// What is known about `𝒜'(η)` at a rational point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Both one-sided quotients tend to `+∞`; `𝒜` is not differentiable.
    DivergesToInfinity,
    /// Whenever the derivative exists it is zero.
    ZeroIfDifferentiable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::DivergesToInfinity => "diverges-to-infinity",
            Verdict::ZeroIfDifferentiable => "zero-if-differentiable",
        })
    }
}

pub fn derivative_at_rational(eta: &ThetaValue) -> Result<Verdict> {
    check_interior(eta)?;
    Ok(if eta.is_dyadic() {
        Verdict::DivergesToInfinity
    } else {
        Verdict::ZeroIfDifferentiable
    })
}

/// `2^n / ([2^n:2^n-(m+1)] v + [2^n:2^n-m])^2`, the factor relating
/// `𝒜'(θ_{DD'})` to `𝒜'(θ_{D'})` when `v = 𝒜(θ_{D'})`.
pub fn affine_derivative_factor(d: &FiniteDesign, v: &ExtRational) -> Result<ExtRational> {
    let [_, _, c, dd] = sdm(d)?.into_entries();
    let scale = BigUint::one() << d.len();
    if v.is_infinite() {
        return Ok(if c.is_zero() {
            ExtRational::new(scale, &dd * &dd)?
        } else {
            ExtRational::zero()
        });
    }
    // (c p/q + d)^2 = (c p + d q)^2 / q^2
    let lin = &c * v.numer() + &dd * v.denom();
    ExtRational::new(scale * v.denom() * v.denom(), &lin * &lin)
}

/// `(2^{n-1} / b_{2n-3})^2`, the bound on right quotients at `2/3` with
/// `h = 2^{-2n}`. Needs `n ≥ 2`.
pub fn vanishing_bound(n: u64) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("b_{{2n-3}} is undefined for n = {n}")));
    }
    let b = BigInt::from(fib_continuant(2 * n - 3)?);
    let r = BigRational::new(BigInt::one() << (n - 1), b);
    Ok(&r * &r)
}

/// `Y = [2^n:m+1] + [2^n:2^n-m]`, the trace of `U(P)` for a period `P`.
pub fn period_trace(period: &FiniteDesign) -> Result<BigUint> {
    let [a, _, _, d] = sdm(period)?.into_entries();
    Ok(a + d)
}
