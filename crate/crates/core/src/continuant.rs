//! Continuants and finite continued fractions.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::design::RunLengths;
use crate::error::{Error, Result};
use crate::rational::ExtRational;

/// `[x_0, …, x_{l-1}]` by the left-to-right recursion; `[ε] = 1`.
pub fn continuant(ks: &[u64]) -> BigUint {
    let (mut prev, mut cur) = (BigUint::zero(), BigUint::one());
    for &k in ks {
        let next = &cur * k + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `continuant` over big entries.
pub fn continuant_big(ks: &[BigUint]) -> BigUint {
    let (mut prev, mut cur) = (BigUint::zero(), BigUint::one());
    for k in ks {
        let next = &cur * k + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Continuant of a word of length `-1`, used by the corner formulas.
fn continuant_slice(ks: &[u64], lo: usize, hi: isize) -> BigUint {
    if hi < lo as isize - 1 {
        BigUint::zero()
    } else {
        continuant(&ks[lo..(hi + 1) as usize])
    }
}

fn check_cf_word(ks: &[u64]) -> Result<()> {
    if ks.is_empty() {
        return Err(Error::MalformedRuns("empty continued fraction".into()));
    }
    let l = ks.len();
    if let Some(i) = (1..l.saturating_sub(1)).find(|&i| ks[i] == 0) {
        return Err(Error::MalformedRuns(format!("interior entry {i} is zero")));
    }
    Ok(())
}

/// `CF(k_0, …, k_{l-1}) = k_0 + 1/(k_1 + 1/(…))`, evaluated from the right
/// with `1/0 = ∞` and `1/∞ = 0`.
pub fn cf_eval(ks: &[u64]) -> Result<ExtRational> {
    check_cf_word(ks)?;
    let (last, rest) = ks.split_last().expect("nonempty");
    let mut v = ExtRational::integer(*last);
    for &k in rest.iter().rev() {
        v = v.recip().add_integer(&BigUint::from(k));
    }
    Ok(v)
}

/// `[2^n : m]` from the run lengths of `{m}_n`.
pub fn sdi_from_runs(ks: &RunLengths) -> BigUint {
    continuant(ks.as_slice())
}

/// `([k_0..k_{l-1}], [k_1..k_{l-1}], [k_0..k_{l-2}], [k_1..k_{l-2}])`, that is
/// `([2^n:m], [2^n:2^n-m], [2^n:m+1], [2^n:2^n-(m+1)])`.
///
/// For `l = 1` the last entry is the length `-1` continuant, taken as 0.
pub fn sdi_corner_continuants(ks: &RunLengths) -> (BigUint, BigUint, BigUint, BigUint) {
    let k = ks.as_slice();
    let l = k.len() as isize;
    (
        continuant_slice(k, 0, l - 1),
        continuant_slice(k, 1, l - 1),
        continuant_slice(k, 0, l - 2),
        continuant_slice(k, 1, l - 2),
    )
}

/// The continued-fraction tails whose product is `[k_0, …, k_{l-1}]`.
///
/// With a positive last entry these are `CF(k_j, …, k_{l-1})` for every `j`;
/// with a zero last entry and `l ≥ 3` they are `CF(k_j, …, k_{l-3})`.
pub fn cf_product_decomposition(ks: &[u64]) -> Result<Vec<ExtRational>> {
    check_cf_word(ks)?;
    let l = ks.len();
    let end = match ks[l - 1] {
        0 if l >= 3 => l - 2,
        0 => {
            return Err(Error::MalformedRuns(
                "a zero last entry needs at least three entries".into(),
            ))
        }
        _ => l,
    };
    (0..end).map(|j| cf_eval(&ks[j..end])).collect()
}

/// Multiplies a list of values; an empty list gives 1.
pub fn product(values: &[ExtRational]) -> Result<ExtRational> {
    values
        .iter()
        .try_fold(ExtRational::one(), |acc, v| acc.checked_mul(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::FiniteDesign;
    use crate::sdi::{sdi_quadruple, stern_u64, SdiAddress};
    use proptest::prelude::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn q(s: &str) -> ExtRational {
        s.parse().unwrap()
    }

    /// Leibniz expansion of the tridiagonal determinant with `x_i` on the
    /// diagonal, 1 above and -1 below.
    fn determinant_oracle(xs: &[u64]) -> i128 {
        let l = xs.len();
        let entry = |i: usize, j: usize| -> i128 {
            if i == j {
                xs[i] as i128
            } else if j == i + 1 {
                1
            } else if i == j + 1 {
                -1
            } else {
                0
            }
        };
        let mut perm: Vec<usize> = (0..l).collect();
        let mut total = 0i128;
        permutations(&mut perm, 0, &mut |p| {
            let inversions = (0..l)
                .flat_map(|i| (i + 1..l).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            total += sign * (0..l).map(|i| entry(i, p[i])).product::<i128>();
        });
        total
    }

    fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permutations(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn continuant_values() {
        assert_eq!(continuant(&[]), big(1));
        assert_eq!(continuant(&[2, 2, 1]), big(7));
        assert_eq!(continuant(&[1, 1, 1, 1]), big(5));
        assert_eq!(continuant(&[0]), big(0));
        assert_eq!(continuant(&[1, 5, 0]), big(1));
    }

    #[test]
    fn cf_values() {
        assert_eq!(cf_eval(&[2, 3]).unwrap(), q("7/3"));
        assert_eq!(cf_eval(&[0]).unwrap(), q("0"));
        assert_eq!(cf_eval(&[4, 0]).unwrap(), ExtRational::infinity());
        assert_eq!(cf_eval(&[0, 0]).unwrap(), ExtRational::infinity());
        assert_eq!(cf_eval(&[2, 2, 1]).unwrap(), q("7/3"));
        assert!(cf_eval(&[1, 0, 1]).is_err());
        assert!(cf_eval(&[]).is_err());
    }

    #[test]
    fn runs_give_sdi() {
        let r = |v: Vec<u64>| RunLengths::new(v).unwrap();
        assert_eq!(sdi_from_runs(&r(vec![2, 2, 1])), big(7));
        assert_eq!(sdi_from_runs(&r(vec![0])), big(0));
        for n in 1..12 {
            assert_eq!(sdi_from_runs(&r(vec![1, n, 0])), big(1));
        }
    }

    #[test]
    fn corner_examples() {
        let r = |v: Vec<u64>| RunLengths::new(v).unwrap();
        let c = |v| {
            let (a, b, c, d) = sdi_corner_continuants(&r(v));
            [a, b, c, d].map(|x| u64::try_from(x).unwrap())
        };
        assert_eq!(c(vec![2, 2, 1]), [7, 3, 5, 2]);
        assert_eq!(c(vec![6]), [6, 1, 1, 0]);
        assert_eq!(c(vec![1, 1, 1]), [3, 2, 2, 1]);
    }

    #[test]
    fn corners_match_quadruples() {
        for n in 0..=10usize {
            for m in 0..(1u64 << n) {
                let d = FiniteDesign::from_number(&big(m), n).unwrap();
                let (p, q, r, s) = sdi_corner_continuants(&d.runs().unwrap());
                let (a, b, c, dd) = sdi_quadruple(&SdiAddress::new(n as u64, m)).unwrap();
                assert_eq!((p, q, r, s), (b, dd, a, c), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn product_examples() {
        let tails = cf_product_decomposition(&[1, 1]).unwrap();
        assert_eq!(tails, vec![q("2"), q("1")]);
        let tails = cf_product_decomposition(&[2, 2, 1]).unwrap();
        assert_eq!(tails, vec![q("7/3"), q("3"), q("1")]);
        assert_eq!(product(&tails).unwrap(), q("7"));
        let tails = cf_product_decomposition(&[2, 2, 0]).unwrap();
        assert_eq!(tails, vec![q("2")]);
        assert!(cf_product_decomposition(&[3, 0]).is_err());
    }

    #[test]
    fn cf_matches_sdi_ratio_on_reduced_designs() {
        for n in 1..=10usize {
            for m in (1..(1u64 << n)).step_by(2) {
                let d = FiniteDesign::from_number(&big(m), n).unwrap();
                let ks = d.runs().unwrap();
                let want = ExtRational::new(stern_u64(m), stern_u64((1 << n) - m)).unwrap();
                assert_eq!(cf_eval(ks.as_slice()).unwrap(), want);
                // reversal symmetry of the run word
                assert_eq!(sdi_from_runs(&ks.reversed()), stern_u64(m));
            }
        }
    }

    fn word(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
        prop::collection::vec(0u64..=6, 0..=max_len)
    }

    proptest! {
        #[test]
        fn reversal(xs in word(8)) {
            let rev: Vec<u64> = xs.iter().rev().copied().collect();
            prop_assert_eq!(continuant(&xs), continuant(&rev));
        }

        #[test]
        fn head_expansion(xs in prop::collection::vec(0u64..=6, 2..=8)) {
            prop_assert_eq!(continuant(&xs), continuant(&xs[1..]) * xs[0] + continuant(&xs[2..]));
        }

        #[test]
        fn one_absorption(xs in prop::collection::vec(0u64..=6, 1..=8)) {
            let mut tail = xs.clone();
            tail.push(1);
            let mut bumped = xs.clone();
            *bumped.last_mut().unwrap() += 1;
            prop_assert_eq!(continuant(&tail), continuant(&bumped));
            let mut head = vec![1];
            head.extend_from_slice(&xs);
            let mut front = xs.clone();
            front[0] += 1;
            prop_assert_eq!(continuant(&head), continuant(&front));
        }

        #[test]
        fn zero_deletion(xs in prop::collection::vec(0u64..=6, 1..=8)) {
            let mut tail = xs.clone();
            tail.push(0);
            prop_assert_eq!(continuant(&tail), continuant(&xs[..xs.len() - 1]));
            let mut head = vec![0];
            head.extend_from_slice(&xs);
            prop_assert_eq!(continuant(&head), continuant(&xs[1..]));
        }

        #[test]
        fn last_entry_shift(xs in prop::collection::vec(0u64..=6, 1..=8), x in 0u64..=6) {
            let l = xs.len();
            let mut shifted = xs.clone();
            shifted[l - 1] += x;
            prop_assert_eq!(
                continuant(&shifted),
                continuant(&xs[..l - 1]) * x + continuant(&xs)
            );
        }

        #[test]
        fn determinant_form(xs in prop::collection::vec(0u64..=6, 1..=6)) {
            prop_assert_eq!(BigUint::from(determinant_oracle(&xs) as u64), continuant(&xs));
        }

        #[test]
        fn product_formula(xs in prop::collection::vec(1u64..=6, 1..=8), zero_end in any::<bool>()) {
            let mut ks = xs.clone();
            if zero_end && ks.len() >= 2 {
                ks.push(0);
            }
            let tails = cf_product_decomposition(&ks).unwrap();
            prop_assert_eq!(product(&tails).unwrap(), ExtRational::integer(continuant(&ks)));
        }
    }
}
