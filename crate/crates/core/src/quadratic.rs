//! Periodic designs and the quadratic irrationals they evaluate to.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::design::{FiniteDesign, PeriodicDesign, RunLengths, ThetaValue};
use crate::error::{Error, Result};
use crate::matrix::{sdm, SignedMatrix};
use crate::rational::ExtRational;

/// Splits `n = f^2 * d`, removing square factors of primes below a fixed
/// bound. `d` is square-free whenever `n` has no repeated prime above it.
pub fn split_square(n: &BigUint) -> (BigUint, BigUint) {
    const BOUND: u32 = 100_000;
    let mut f = BigUint::one();
    let mut d = n.clone();
    let mut p = 2u32;
    while p < BOUND && BigUint::from(p) * p <= d {
        let pp = BigUint::from(p) * p;
        while (&d % &pp).is_zero() {
            d /= &pp;
            f *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (f, d)
}

/// `r + s√d` in the real quadratic field `Q(√d)`, `d` not a square.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    r: BigRational,
    s: BigRational,
    d: BigUint,
}

impl QuadSurd {
    pub fn new(r: BigRational, s: BigRational, d: BigUint) -> Self {
        QuadSurd { r, s, d }
    }

    pub fn from_rational(r: BigRational, d: &BigUint) -> Self {
        QuadSurd::new(r, BigRational::zero(), d.clone())
    }

    pub fn from_integer(n: impl Into<BigInt>, d: &BigUint) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()), d)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.r
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.s
    }

    pub fn radicand(&self) -> &BigUint {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }

    /// `r - s√d`.
    pub fn conj(&self) -> Self {
        QuadSurd::new(self.r.clone(), -self.s.clone(), self.d.clone())
    }

    /// `r^2 - d s^2`.
    pub fn norm(&self) -> BigRational {
        &self.r * &self.r - &self.s * &self.s * BigRational::from_integer(self.d.clone().into())
    }

    pub fn signum(&self) -> Ordering {
        let (rs, ss) = (self.r.cmp(&BigRational::zero()), self.s.cmp(&BigRational::zero()));
        if rs == ss || ss == Ordering::Equal {
            return rs;
        }
        if rs == Ordering::Equal {
            return ss;
        }
        // opposite signs: the larger magnitude wins
        let d = BigRational::from_integer(self.d.clone().into());
        let r2 = &self.r * &self.r;
        let s2d = &self.s * &self.s * d;
        match r2.cmp(&s2d) {
            Ordering::Greater => rs,
            Ordering::Less => ss,
            Ordering::Equal => unreachable!("d is not a square"),
        }
    }

    pub fn recip(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero in Q(√d)");
        let c = self.conj();
        QuadSurd::new(&c.r / &n, &c.s / &n, self.d.clone())
    }

    /// `(a x + b) / (c x + d)` for an integer matrix.
    pub fn mobius(&self, m: &SignedMatrix) -> Self {
        let k = |v: &BigInt| QuadSurd::from_integer(v.clone(), &self.d);
        let num = &(self * &k(&m.a)) + &k(&m.b);
        let den = &(self * &k(&m.c)) + &k(&m.d);
        &num / &den
    }

    /// Floating-point approximation, for display only.
    pub fn approx(&self) -> f64 {
        let f = |q: &BigRational| {
            let n: f64 = q.numer().to_string().parse().unwrap_or(f64::NAN);
            let d: f64 = q.denom().to_string().parse().unwrap_or(f64::NAN);
            n / d
        };
        let d: f64 = self.d.to_string().parse().unwrap_or(f64::NAN);
        f(&self.r) + f(&self.s) * d.sqrt()
    }

    fn same_field(&self, o: &Self) {
        assert_eq!(self.d, o.d, "mixed quadratic fields");
    }
}

impl Ord for QuadSurd {
    fn cmp(&self, o: &Self) -> Ordering {
        (self - o).signum()
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Add for &QuadSurd {
    type Output = QuadSurd;
    fn add(self, o: &QuadSurd) -> QuadSurd {
        self.same_field(o);
        QuadSurd::new(&self.r + &o.r, &self.s + &o.s, self.d.clone())
    }
}

impl Sub for &QuadSurd {
    type Output = QuadSurd;
    fn sub(self, o: &QuadSurd) -> QuadSurd {
        self.same_field(o);
        QuadSurd::new(&self.r - &o.r, &self.s - &o.s, self.d.clone())
    }
}

impl Mul for &QuadSurd {
    type Output = QuadSurd;
    fn mul(self, o: &QuadSurd) -> QuadSurd {
        self.same_field(o);
        let d = BigRational::from_integer(self.d.clone().into());
        QuadSurd::new(
            &self.r * &o.r + &self.s * &o.s * d,
            &self.r * &o.s + &self.s * &o.r,
            self.d.clone(),
        )
    }
}

impl Div for &QuadSurd {
    type Output = QuadSurd;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &QuadSurd) -> QuadSurd {
        self * &o.recip()
    }
}

impl Neg for &QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd::new(-self.r.clone(), -self.s.clone(), self.d.clone())
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = |f: &mut fmt::Formatter<'_>, s: &BigRational| {
            if s.is_one() {
                write!(f, "sqrt({})", self.d)
            } else {
                write!(f, "{}*sqrt({})", s, self.d)
            }
        };
        if self.s.is_zero() {
            return write!(f, "{}", self.r);
        }
        if self.r.is_zero() {
            if self.s.is_negative() {
                f.write_str("-")?;
            }
            return root(f, &self.s.abs());
        }
        let sign = if self.s.is_negative() { '-' } else { '+' };
        write!(f, "{} {} ", self.r, sign)?;
        root(f, &self.s.abs())
    }
}

/// Which root of the equation a quadratic irrational is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootSign {
    /// `(b1 + √Δ) / (2 a2)`
    Plus,
    /// `(b1 - √Δ) / (2 a2)`
    Minus,
}

/// A root of `a2 x^2 - b1 x - c0 = 0` with primitive integer coefficients,
/// `a2 ≥ 1` and non-square discriminant `Δ = b1^2 + 4 a2 c0 > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadIrr {
    a2: BigInt,
    b1: BigInt,
    c0: BigInt,
    root: RootSign,
}

impl QuadIrr {
    pub fn new(a2: BigInt, b1: BigInt, c0: BigInt, root: RootSign) -> Result<Self> {
        let (mut a2, mut b1, mut c0, mut root) = (a2, b1, c0, root);
        if a2.is_zero() {
            return Err(Error::OutOfRange("leading coefficient is zero".into()));
        }
        if a2.is_negative() {
            // negating every coefficient swaps the roles of the two roots
            a2 = -a2;
            b1 = -b1;
            c0 = -c0;
            root = match root {
                RootSign::Plus => RootSign::Minus,
                RootSign::Minus => RootSign::Plus,
            };
        }
        let g = a2.gcd(&b1).gcd(&c0);
        let (a2, b1, c0) = (a2 / &g, b1 / &g, c0 / &g);
        let disc = &b1 * &b1 + BigInt::from(4) * &a2 * &c0;
        match disc.to_biguint() {
            Some(d) if !d.is_zero() && d.sqrt().pow(2) != d => {}
            _ => return Err(Error::OutOfRange(format!("discriminant {disc} gives no irrational root"))),
        }
        Ok(QuadIrr { a2, b1, c0, root })
    }

    /// The minimal equation of an irrational element of `Q(√d)`.
    pub fn from_surd(v: &QuadSurd) -> Result<Self> {
        if v.is_rational() {
            return Err(Error::OutOfRange("value is rational".into()));
        }
        // x^2 - 2r x + (r^2 - s^2 d) = 0, scaled to integers
        let two_r = &v.r * BigRational::from_integer(2.into());
        let nrm = v.norm();
        let l = two_r.denom().lcm(nrm.denom());
        let lq = BigRational::from_integer(l.clone());
        let b1 = (&two_r * &lq).to_integer();
        let c0 = -(&nrm * &lq).to_integer();
        let root = if v.s.is_positive() { RootSign::Plus } else { RootSign::Minus };
        QuadIrr::new(l, b1, c0, root)
    }

    pub fn coefficients(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a2, &self.b1, &self.c0)
    }

    pub fn root_sign(&self) -> RootSign {
        self.root
    }

    pub fn discriminant(&self) -> BigUint {
        (&self.b1 * &self.b1 + BigInt::from(4) * &self.a2 * &self.c0)
            .to_biguint()
            .expect("checked positive")
    }

    fn root_with(&self, sign: RootSign) -> QuadSurd {
        let (f, d) = split_square(&self.discriminant());
        let den = BigInt::from(2) * &self.a2;
        let r = BigRational::new(self.b1.clone(), den.clone());
        let s = BigRational::new(BigInt::from(f), den);
        let s = match sign {
            RootSign::Plus => s,
            RootSign::Minus => -s,
        };
        QuadSurd::new(r, s, d)
    }

    /// The selected root as an element of `Q(√d)`.
    pub fn value(&self) -> QuadSurd {
        self.root_with(self.root)
    }

    /// The other root of the same equation.
    pub fn conjugate_root(&self) -> QuadSurd {
        self.value().conj()
    }

    /// Sign of `a2 x^2 - b1 x - c0` at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let a2 = BigRational::from_integer(self.a2.clone());
        let b1 = BigRational::from_integer(self.b1.clone());
        let c0 = BigRational::from_integer(self.c0.clone());
        (a2 * x * x - b1 * x - c0).cmp(&BigRational::zero())
    }

    /// Whether the root lies in the closed interval `[lo, hi]` (`hi` may be ∞).
    pub fn lies_in(&self, lo: &ExtRational, hi: &ExtRational) -> bool {
        let v = self.value();
        let as_surd = |x: &ExtRational| {
            QuadSurd::from_rational(
                BigRational::new(x.numer().clone().into(), x.denom().clone().into()),
                v.radicand(),
            )
        };
        let above = !lo.is_infinite() && v >= as_surd(lo);
        let below = hi.is_infinite() || v <= as_surd(hi);
        above && below
    }
}

impl fmt::Display for QuadIrr {
    /// `A x^2 + B x + C = 0` with `A = a2`, `B = -b1`, `C = -c0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lead = if self.a2.is_one() { String::new() } else { self.a2.to_string() };
        write!(f, "{lead}x^2")?;
        let b = -self.b1.clone();
        let c = -self.c0.clone();
        if !b.is_zero() {
            let sign = if b.is_negative() { '-' } else { '+' };
            let mag = b.abs();
            let mag = if mag.is_one() { String::new() } else { mag.to_string() };
            write!(f, " {sign} {mag}x")?;
        }
        if !c.is_zero() {
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, " {sign} {}", c.abs())?;
        }
        f.write_str(" = 0")
    }
}

fn check_period(period: &FiniteDesign) -> Result<()> {
    let bits = period.bits();
    if period.is_terminal() || bits.len() < 2 {
        return Err(Error::InvalidPeriod(format!("{period} is too short")));
    }
    if bits.iter().all(|&b| b) || bits.iter().all(|&b| !b) {
        return Err(Error::InvalidPeriod(format!("{period} is constant")));
    }
    Ok(())
}

fn from_fixed_point(m: &SignedMatrix) -> (BigInt, BigInt, BigInt) {
    // X = (αX + β)/(γX + δ)  ⇔  γX^2 - (α - δ)X - β = 0
    (m.c.clone(), &m.a - &m.d, m.b.clone())
}

/// The fixed-point equation of `U(P)`, whose positive root is `𝒜` of the
/// purely periodic design with period `P`.
pub fn quad_from_period(period: &FiniteDesign) -> Result<QuadIrr> {
    check_period(period)?;
    let (a2, b1, c0) = from_fixed_point(&sdm(period)?.to_signed());
    // c0 = b > 0 and a2 = c > 0, so the roots have opposite signs
    QuadIrr::new(a2, b1, c0, RootSign::Plus)
}

/// `𝒜(θ_D)` for an eventually periodic design `D = D'(P)`, as the fixed point
/// of `U(D') U(P) U(D')^{-1}` that `U(D')` carries the period's root to.
pub fn quad_of_periodic(pd: &PeriodicDesign) -> Result<QuadIrr> {
    let period = pd.period_design();
    let pure = quad_from_period(&period)?;
    if pd.is_purely_periodic() {
        return Ok(pure);
    }
    let u = sdm(&pd.preperiod_design())?.to_signed();
    let conj = &(&u * &sdm(&period)?.to_signed()) * &u.unimodular_inverse();
    let (mut a2, mut b1, mut c0) = from_fixed_point(&conj);
    if a2.is_negative() {
        (a2, b1, c0) = (-a2, -b1, -c0);
    }
    let value = pure.value().mobius(&u);
    // pick the root on the same side of the midpoint b1/(2 a2) as the value
    let mid = QuadSurd::from_rational(
        BigRational::new(b1.clone(), BigInt::from(2) * &a2),
        value.radicand(),
    );
    let sign = if (&value - &mid).signum() == Ordering::Greater {
        RootSign::Plus
    } else {
        RootSign::Minus
    };
    let q = QuadIrr::new(a2, b1, c0, sign)?;
    debug_assert_eq!(q.value(), value);
    Ok(q)
}

/// One step state `(p + √d) / q` of the quadratic-surd continued fraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurdState {
    pub p: BigInt,
    pub q: BigInt,
    pub d: BigUint,
}

impl SurdState {
    /// `floor((p + √d) / q)`; `√d` is irrational so the quotient is never exact.
    fn floor(&self) -> BigInt {
        let root = BigInt::from(self.d.sqrt());
        if self.q.is_positive() {
            (&self.p + root).div_floor(&self.q)
        } else {
            let mag: BigInt = -self.q.clone();
            let y: BigInt = (&self.p + root).div_floor(&mag);
            -(y + BigInt::one())
        }
    }

    /// Returns the partial quotient and the next complete quotient.
    pub fn step(&self) -> (BigInt, SurdState) {
        let a = self.floor();
        let p = &a * &self.q - &self.p;
        let q = (BigInt::from(self.d.clone()) - &p * &p) / &self.q;
        (a, SurdState { p, q, d: self.d.clone() })
    }
}

/// Expands the runs `k_0, k_1, …` into bits starting from run index `start`.
fn expand_runs(ks: &[BigInt], start: usize) -> Result<Vec<bool>> {
    let mut bits = Vec::new();
    for (i, k) in ks.iter().enumerate() {
        let k = usize::try_from(k)
            .map_err(|_| Error::OutOfRange(format!("partial quotient {k} is too large")))?;
        bits.extend(std::iter::repeat_n((start + i).is_multiple_of(2), k));
    }
    Ok(bits)
}

/// The periodic design with `𝒜(θ_D) = √Q`.
pub fn periodic_design_of_sqrt(x: &ExtRational) -> Result<PeriodicDesign> {
    if x.is_zero() || x.is_infinite() {
        return Err(Error::NonPositive);
    }
    let n = x.numer() * x.denom();
    if n.sqrt().pow(2) == n {
        return Err(Error::PerfectSquare(x.to_string()));
    }
    // √(p/q) = √(pq) / q
    let mut state = SurdState {
        p: BigInt::zero(),
        q: BigInt::from(x.denom().clone()),
        d: n,
    };
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut quotients = Vec::new();
    let start = loop {
        if let Some(&i) = seen.get(&(state.p.clone(), state.q.clone())) {
            break i;
        }
        seen.insert((state.p.clone(), state.q.clone()), quotients.len());
        let (a, next) = state.step();
        quotients.push(a);
        state = next;
    };
    let (pre, per) = quotients.split_at(start);
    let mut period = per.to_vec();
    if period.len() % 2 == 1 {
        period.extend_from_within(..);
    }
    PeriodicDesign::canonical(expand_runs(pre, 0)?, expand_runs(&period, start)?)
}

/// Type of a period's quadratic irrational, by whether the first and last
/// runs are nonempty: `(≥1, 0) → 1`, `(≥1, ≥1) → 2`, `(0, 0) → 3`, `(0, ≥1) → 4`.
pub fn classify_type(period: &FiniteDesign) -> Result<u8> {
    check_period(period)?;
    let ks = period.runs()?;
    Ok(match (ks.first() >= 1, ks.last() >= 1) {
        (true, false) => 1,
        (true, true) => 2,
        (false, false) => 3,
        (false, true) => 4,
    })
}

/// The inverse design of a period; its root is minus the conjugate root.
pub fn conjugate_root_design(period: &FiniteDesign) -> Result<FiniteDesign> {
    check_period(period)?;
    period.inverse()
}

/// Whether `𝒜(θ)` is rational, a pure quadratic irrational, or neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Purity {
    Rational,
    PureQuadratic,
    NonPureQuadratic,
}

impl fmt::Display for Purity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Purity::Rational => "rational",
            Purity::PureQuadratic => "pure",
            Purity::NonPureQuadratic => "non-pure",
        })
    }
}

pub fn purity_test(t: &ThetaValue) -> Purity {
    if t.is_dyadic() {
        Purity::Rational
    } else if t.denom().is_odd() {
        Purity::PureQuadratic
    } else {
        Purity::NonPureQuadratic
    }
}

/// Whether the run list of the period reads the same reversed.
pub fn has_palindromic_runs(period: &FiniteDesign) -> bool {
    period.runs().map(|r: RunLengths| r.is_palindrome()).unwrap_or(false)
}
