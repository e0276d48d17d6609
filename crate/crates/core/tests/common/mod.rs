//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's evaluation paths.

#![allow(dead_code)]

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `a_0..=a_limit` by the defining recurrence.
pub fn stern_table(limit: usize) -> Vec<u64> {
    let mut a = vec![0u64; limit + 2];
    a[1] = 1;
    for m in 2..=limit + 1 {
        a[m] = if m % 2 == 0 { a[m / 2] } else { a[m / 2] + a[m / 2 + 1] };
    }
    a.truncate(limit + 1);
    a
}

/// Euler's totient by counting.
pub fn phi(a: u64) -> u64 {
    (1..=a).filter(|&b| gcd(a, b) == 1).count() as u64
}

/// Reduced `p/q` as a pair.
pub fn reduce(p: u64, q: u64) -> (u64, u64) {
    let g = gcd(p, q);
    (p / g, q / g)
}

/// `?^{-1}(m/2^n)` by walking the Stern–Brocot tree between 0/1 and 1/1:
/// after the leading bits, each 1 moves the lower end up to the mediant
/// and each 0 moves the upper end down; the final 1 lands on the mediant.
pub fn question_mark_inverse_by_mediants(m: u64, n: u32) -> (u64, u64) {
    if m == 0 {
        return (0, 1);
    }
    if m == 1 << n {
        return (1, 1);
    }
    let k = m.trailing_zeros();
    let (m, n) = (m >> k, n - k);
    let (mut lo, mut hi) = ((0u64, 1u64), (1u64, 1u64));
    for i in (1..n).rev() {
        let med = (lo.0 + hi.0, lo.1 + hi.1);
        if (m >> i) & 1 == 1 {
            lo = med;
        } else {
            hi = med;
        }
    }
    (lo.0 + hi.0, lo.1 + hi.1)
}

/// Bits of `m` as an `n`-letter word.
pub fn word(m: u64, n: usize) -> String {
    (0..n).rev().map(|i| if (m >> i) & 1 == 1 { '1' } else { '0' }).collect()
}

/// `a_m` by Dijkstra's fusc loop over the bits of `m`, least significant first.
pub fn fusc(mut m: u64) -> u64 {
    let (mut a, mut b) = (1u64, 0u64);
    while m > 0 {
        if m.is_multiple_of(2) {
            a += b;
        } else {
            b += a;
        }
        m /= 2;
    }
    b
}

/// Continuant by the three-term recurrence on `u128`.
pub fn continuant(xs: &[u64]) -> u128 {
    let (mut prev, mut cur) = (0u128, 1u128);
    for &x in xs {
        (prev, cur) = (cur, cur * x as u128 + prev);
    }
    cur
}

/// Maximal runs of the `n`-bit word of `m`, alternating ones/zeros and
/// starting with a (possibly empty) run of ones.
pub fn runs_of(m: u64, n: u32) -> Vec<u64> {
    let mut out = vec![0u64];
    let mut want_one = true;
    for i in (0..n).rev() {
        let bit = (m >> i) & 1 == 1;
        if bit != want_one {
            out.push(0);
            want_one = !want_one;
        }
        *out.last_mut().unwrap() += 1;
    }
    if out.len() % 2 == 0 {
        out.push(0);
    }
    out
}
