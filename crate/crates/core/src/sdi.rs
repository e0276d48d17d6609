//! Stern's diatomic sequence and its table form `[2^n : m]`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A cell of the diatomic table: depth `n` and order `m`, `0 <= m <= 2^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SdiAddress {
    pub depth: u64,
    pub order: BigUint,
}

impl SdiAddress {
    pub fn new(depth: u64, order: impl Into<BigUint>) -> Self {
        SdiAddress {
            depth,
            order: order.into(),
        }
    }

    pub fn width(&self) -> BigUint {
        BigUint::one() << self.depth
    }

    fn check(&self) -> Result<BigUint> {
        let w = self.width();
        if self.order > w {
            return Err(Error::OutOfTable {
                depth: self.depth.to_string(),
                order: self.order.to_string(),
            });
        }
        Ok(w)
    }
}

/// Returns `(a_m, a_{m+1})`.
///
/// Scans the binary digits of `m` from the top, keeping the consecutive pair
/// `(a_j, a_{j+1})` for the prefix `j` read so far.
pub fn stern_pair(m: &BigUint) -> (BigUint, BigUint) {
    let mut lo = BigUint::zero();
    let mut hi = BigUint::one();
    for i in (0..m.bits()).rev() {
        if m.bit(i) {
            lo += &hi;
        } else {
            hi += &lo;
        }
    }
    (lo, hi)
}

/// `a_m`, Stern's diatomic sequence.
pub fn stern(m: &BigUint) -> BigUint {
    stern_pair(m).0
}

/// `a_m` for machine-sized orders.
pub fn stern_u64(m: u64) -> BigUint {
    stern(&BigUint::from(m))
}

/// `[2^depth : order]`.
pub fn sdi(addr: &SdiAddress) -> Result<BigUint> {
    addr.check()?;
    Ok(stern(&addr.order))
}

/// The four table entries around `(n, m)`:
/// `([2^n:m+1], [2^n:m], [2^n:2^n-(m+1)], [2^n:2^n-m])`.
///
/// These are the entries of the diatomic matrix in row-major order, and
/// they always satisfy `q1*q4 - q2*q3 = 1`.
pub fn sdi_quadruple(addr: &SdiAddress) -> Result<(BigUint, BigUint, BigUint, BigUint)> {
    let w = addr.check()?;
    if addr.order == w {
        return Err(Error::OutOfTable {
            depth: addr.depth.to_string(),
            order: addr.order.to_string(),
        });
    }
    let (m0, m1) = stern_pair(&addr.order);
    let (c0, c1) = stern_pair(&(w - &addr.order - 1u32));
    Ok((m1, m0, c0, c1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(limit: usize) -> Vec<u64> {
        let mut a = vec![0u64; limit + 2];
        a[1] = 1;
        for i in 2..=limit + 1 {
            a[i] = if i % 2 == 0 {
                a[i / 2]
            } else {
                a[i / 2] + a[i / 2 + 1]
            };
        }
        a
    }

    #[test]
    fn matches_recurrence() {
        let a = brute(5000);
        for m in 0..5000u64 {
            assert_eq!(stern_u64(m), BigUint::from(a[m as usize]), "m={m}");
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(stern_u64(0), BigUint::zero());
        assert_eq!(stern_u64(5), BigUint::from(3u32));
        assert_eq!(stern_u64(21), BigUint::from(8u32));
        assert_eq!(sdi(&SdiAddress::new(3, 7u32)).unwrap(), BigUint::from(3u32));
        assert_eq!(sdi(&SdiAddress::new(6, 51u32)).unwrap(), BigUint::from(12u32));
        for n in 0..=10u64 {
            let addr = SdiAddress::new(n, BigUint::one() << n);
            assert_eq!(sdi(&addr).unwrap(), BigUint::one());
        }
    }

    #[test]
    fn out_of_table() {
        assert!(matches!(
            sdi(&SdiAddress::new(3, 9u32)),
            Err(Error::OutOfTable { .. })
        ));
        assert!(sdi_quadruple(&SdiAddress::new(3, 8u32)).is_err());
    }

    #[test]
    fn quadruples() {
        let q = |n, m: u32| {
            let (a, b, c, d) = sdi_quadruple(&SdiAddress::new(n, m)).unwrap();
            [a, b, c, d].map(|x| u64::try_from(x).unwrap())
        };
        assert_eq!(q(2, 2), [2, 1, 1, 1]);
        assert_eq!(q(5, 20), [8, 3, 5, 2]);
        for n in 0..12 {
            assert_eq!(q(n, 0), [1, 0, n, 1]);
        }
    }

    #[test]
    fn huge_depth() {
        // a_{2^k - 1} = k
        let m = (BigUint::one() << 4000u32) - 1u32;
        assert_eq!(stern(&m), BigUint::from(4000u32));
    }
}
