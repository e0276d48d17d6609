use std::fmt;

use crate::error::{Error, Result};

/// Block lengths `(k_0, …, k_{l-1})` of a word `1^{k_0} 0^{k_1} … 1^{k_{l-1}}`.
///
/// `l` is odd, the interior entries are positive, and the two ends may be zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RunLengths(Vec<u64>);

impl RunLengths {
    pub fn new(ks: Vec<u64>) -> Result<Self> {
        let l = ks.len();
        if l.is_multiple_of(2) {
            return Err(Error::MalformedRuns(format!("length {l} is not odd")));
        }
        if let Some(i) = (1..l.saturating_sub(1)).find(|&i| ks[i] == 0) {
            return Err(Error::MalformedRuns(format!("interior entry {i} is zero")));
        }
        Ok(RunLengths(ks))
    }

    /// Runs of a bit word, padded with zero-length ends so that the word
    /// starts with a block of ones and ends with a block of ones.
    pub fn of_bits(bits: &[bool]) -> Self {
        let mut ks = Vec::new();
        let mut current = true;
        let mut count = 0u64;
        for &b in bits {
            if b == current {
                count += 1;
            } else {
                ks.push(count);
                current = b;
                count = 1;
            }
        }
        ks.push(count);
        if ks.len() % 2 == 0 {
            ks.push(0);
        }
        RunLengths(ks)
    }

    pub fn to_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(self.total() as usize);
        for (i, &k) in self.0.iter().enumerate() {
            bits.extend(std::iter::repeat_n(i % 2 == 0, k as usize));
        }
        bits
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> u64 {
        self.0[0]
    }

    pub fn last(&self) -> u64 {
        self.0[self.0.len() - 1]
    }

    /// Word length `n = Σ k_i`.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> Self {
        RunLengths(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }
}

impl fmt::Display for RunLengths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}
