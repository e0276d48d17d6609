//! Nonnegative unimodular 2×2 matrices and their bijection with finite designs.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::design::FiniteDesign;
use crate::error::{Error, Result};
use crate::rational::ExtRational;
use crate::sdi::{sdi_quadruple, SdiAddress};

/// `(a b; c d)` with nonnegative entries and `ad - bc = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniModMatrix {
    a: BigUint,
    b: BigUint,
    c: BigUint,
    d: BigUint,
}

impl UniModMatrix {
    pub fn new(
        a: impl Into<BigUint>,
        b: impl Into<BigUint>,
        c: impl Into<BigUint>,
        d: impl Into<BigUint>,
    ) -> Result<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if &a * &d != &b * &c + 1u32 {
            let det = BigInt::from(&a * &d) - BigInt::from(&b * &c);
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(UniModMatrix { a, b, c, d })
    }

    pub fn identity() -> Self {
        Self::from_parts(1u32, 0u32, 0u32, 1u32)
    }

    /// `R = U("1")`.
    pub fn right() -> Self {
        Self::from_parts(1u32, 1u32, 0u32, 1u32)
    }

    /// `L = U("0")`.
    pub fn left() -> Self {
        Self::from_parts(1u32, 0u32, 1u32, 1u32)
    }

    fn from_parts(a: u32, b: u32, c: u32, d: u32) -> Self {
        UniModMatrix {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn entries(&self) -> [&BigUint; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn into_entries(self) -> [BigUint; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn to_signed(&self) -> SignedMatrix {
        SignedMatrix::new(
            self.a.clone().into(),
            self.b.clone().into(),
            self.c.clone().into(),
            self.d.clone().into(),
        )
    }
}

impl Mul for &UniModMatrix {
    type Output = UniModMatrix;

    fn mul(self, o: &UniModMatrix) -> UniModMatrix {
        UniModMatrix {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

impl fmt::Display for UniModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.b, self.c, self.d)
    }
}

/// Parses `a,b;c,d`.
impl FromStr for UniModMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Syntax(format!("expected a,b;c,d, got {s:?}"));
        let (top, bottom) = s.trim().split_once(';').ok_or_else(bad)?;
        let (a, b) = top.split_once(',').ok_or_else(bad)?;
        let (c, d) = bottom.split_once(',').ok_or_else(bad)?;
        let mut out = Vec::with_capacity(4);
        for t in [a, b, c, d] {
            let v: BigInt = t.trim().parse().map_err(|_| bad())?;
            match v.to_biguint() {
                Some(u) => out.push(u),
                None => return Err(Error::NegativeEntry),
            }
        }
        let [a, b, c, d]: [BigUint; 4] = out.try_into().expect("four entries");
        UniModMatrix::new(a, b, c, d)
    }
}

/// A 2×2 integer matrix, used where inverses of unimodular matrices appear.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedMatrix {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl SignedMatrix {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        SignedMatrix { a, b, c, d }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Inverse of a determinant-one matrix: `(d -b; -c a)`.
    pub fn unimodular_inverse(&self) -> Self {
        debug_assert!(self.det().is_one());
        SignedMatrix::new(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }
}

impl Mul for &SignedMatrix {
    type Output = SignedMatrix;

    fn mul(self, o: &SignedMatrix) -> SignedMatrix {
        SignedMatrix::new(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }
}

/// Stern's diatomic matrix `U(D)` of a non-terminal design.
pub fn sdm(d: &FiniteDesign) -> Result<UniModMatrix> {
    if d.is_terminal() {
        return Err(Error::TerminalDesign);
    }
    let (m, n) = d.design_number();
    let (a, b, c, dd) = sdi_quadruple(&SdiAddress::new(n as u64, m))?;
    Ok(UniModMatrix { a, b, c, d: dd })
}

/// The design `D` with `U(D) = M`, found by peeling left factors `R` and `L`.
pub fn design_of_matrix(m: &UniModMatrix) -> FiniteDesign {
    let mut bits = Vec::new();
    let (mut a, mut b, mut c, mut d) = (m.a.clone(), m.b.clone(), m.c.clone(), m.d.clone());
    while !(a.is_one() && b.is_zero() && c.is_zero() && d.is_one()) {
        if a >= c && b >= d {
            a -= &c;
            b -= &d;
            bits.push(true);
        } else {
            // unimodularity rules out mixed comparisons
            debug_assert!(c >= a && d >= b);
            c -= &a;
            d -= &b;
            bits.push(false);
        }
    }
    FiniteDesign::from_bits(bits)
}

/// `(a x + b) / (c x + d)`, with `∞ ↦ a/c`.
pub fn apply_mobius(m: &UniModMatrix, x: &ExtRational) -> ExtRational {
    let (p, q) = (x.numer(), x.denom());
    ExtRational::new(&m.a * p + &m.b * q, &m.c * p + &m.d * q)
        .expect("a nonnegative unimodular map never forms 0/0")
}

/// `U(D*)`, `U` of the complement of `D*`, and `U` of the complement of `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSymmetries {
    pub inverse: UniModMatrix,
    pub complement_of_inverse: UniModMatrix,
    pub complement: UniModMatrix,
}

impl MatrixSymmetries {
    /// The entry permutations `(d b; c a)`, `(a c; b d)`, `(d c; b a)` of `U(D)`.
    pub fn predicted(u: &UniModMatrix) -> Self {
        let p = |a: &BigUint, b: &BigUint, c: &BigUint, d: &BigUint| UniModMatrix {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            d: d.clone(),
        };
        MatrixSymmetries {
            inverse: p(&u.d, &u.b, &u.c, &u.a),
            complement_of_inverse: p(&u.a, &u.c, &u.b, &u.d),
            complement: p(&u.d, &u.c, &u.b, &u.a),
        }
    }
}

pub fn matrix_symmetries(d: &FiniteDesign) -> Result<MatrixSymmetries> {
    let inv = d.inverse()?;
    Ok(MatrixSymmetries {
        inverse: sdm(&inv)?,
        complement_of_inverse: sdm(&inv.complement()?)?,
        complement: sdm(&d.complement()?)?,
    })
}
