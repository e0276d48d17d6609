use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{FiniteDesign, RunLengths};
use crate::continuant::continuant_big;
use crate::error::{Error, Result};

fn check_pair(a: &BigUint, b: &BigUint) -> Result<()> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !a.gcd(b).is_one() {
        return Err(Error::NotCoprime);
    }
    Ok(())
}

/// Quotients `(r_0, …, r_{t-1})` of the Euclidean algorithm on `(a, b)`.
pub fn partial_quotients(a: &BigUint, b: &BigUint) -> Result<Vec<BigUint>> {
    check_pair(a, b)?;
    let (mut x, mut y) = (a.clone(), b.clone());
    let mut qs = Vec::new();
    while !y.is_zero() {
        let (q, r) = x.div_rem(&y);
        qs.push(q);
        x = y;
        y = r;
    }
    Ok(qs)
}

/// The coprime pair whose quotients are `qs`: `([r_0..], [r_1..])`.
pub fn realizing_pair(qs: &[BigUint]) -> (BigUint, BigUint) {
    let a = continuant_big(qs);
    let b = continuant_big(qs.get(1..).unwrap_or(&[]));
    (a, b)
}

/// The reduced design `D` with `[D] = a` and `[conjugate D] = b`.
pub fn euclidean_design(a: &BigUint, b: &BigUint) -> Result<FiniteDesign> {
    let qs = partial_quotients(a, b)?;
    let mut ks = qs
        .iter()
        .map(|q| {
            q.to_u64()
                .filter(|&k| k <= u32::MAX as u64)
                .ok_or_else(|| Error::OutOfRange(format!("quotient {q} is too long a run")))
        })
        .collect::<Result<Vec<u64>>>()?;
    if ks.len() % 2 == 0 {
        // even t: close with r_{t-1} - 1 zeros and a final one
        let last = ks.last_mut().expect("nonempty");
        *last -= 1;
        ks.push(1);
    }
    Ok(FiniteDesign::from_runs(&RunLengths::new(ks)?))
}

/// Inverts `euclidean_design` on a reduced design: recovers the quotients
/// of `([D], [conjugate D])` from the run lengths.
pub fn design_quotients(d: &FiniteDesign) -> Result<Vec<BigUint>> {
    if d.is_terminal() || d.is_empty() || !d.is_reduced() {
        return Err(Error::OutOfRange(format!("{d} is not a nonempty reduced design")));
    }
    let ks = d.runs()?.into_vec();
    let l = ks.len();
    let out: Vec<u64> = if ks[l - 1] >= 2 || l == 1 {
        ks
    } else {
        let mut r = ks[..l - 2].to_vec();
        r.push(ks[l - 2] + 1);
        r
    };
    Ok(out.into_iter().map(BigUint::from).collect())
}
