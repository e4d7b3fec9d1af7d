//! Factor statistics: subword complexity, pattern counts and cube detection.

use super::suffix::SuffixAutomaton;
use super::well_distribution::signs;
use crate::algebra::BitVec;
use crate::error::{Error, Result};

/// `p(k)` for `k = 1..=k_max`, the number of distinct factors of length k.
pub fn subword_complexity(prefix: &[u8], k_max: usize) -> Result<Vec<u64>> {
    if k_max > prefix.len() {
        return Err(Error::InvalidParameter(format!(
            "k_max = {k_max} exceeds prefix length {}",
            prefix.len()
        )));
    }
    let alpha = prefix.iter().copied().max().map_or(1, |m| m as usize + 1);
    let mut sam = SuffixAutomaton::with_capacity(alpha, prefix.len());
    for &c in prefix {
        sam.extend(c);
    }
    Ok(sam.factor_counts(k_max))
}

pub const DEFAULT_PATTERN_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct PatternCounts {
    pub k: usize,
    /// indexed by the pattern read as a binary number, first symbol most significant
    pub counts: Vec<u64>,
    /// `N / 2^k`
    pub expected: f64,
    pub max_abs_deviation: f64,
    pub max_rel_deviation: f64,
}

impl PatternCounts {
    pub fn count(&self, pattern: &[u8]) -> u64 {
        let idx = pattern.iter().fold(0usize, |acc, &b| acc << 1 | b as usize);
        self.counts[idx]
    }
}

/// Counts of each binary pattern of length k among the `N - k + 1` windows.
pub fn pattern_frequencies(prefix: &[u8], k: usize, cap: usize) -> Result<PatternCounts> {
    if k == 0 || k > cap {
        return Err(Error::CapExceeded {
            size: k as u128,
            cap: cap as u128,
        });
    }
    signs(prefix)?;
    let mut counts = vec![0u64; 1 << k];
    let mask = (1usize << k) - 1;
    let mut window = 0usize;
    for (i, &b) in prefix.iter().enumerate() {
        window = (window << 1 | b as usize) & mask;
        if i + 1 >= k {
            counts[window] += 1;
        }
    }
    let expected = prefix.len() as f64 / (1u64 << k) as f64;
    let max_abs_deviation = counts
        .iter()
        .map(|&c| (c as f64 - expected).abs())
        .fold(0.0, f64::max);
    let max_rel_deviation = if expected > 0.0 {
        max_abs_deviation / expected
    } else {
        0.0
    };
    Ok(PatternCounts {
        k,
        counts,
        expected,
        max_abs_deviation,
        max_rel_deviation,
    })
}

/// `Ok(None)` when no factor `www` occurs; otherwise the first cube found
/// as `(start, |w|)`, shortest `w` first.
pub fn cube_free_check(prefix: &[u8]) -> Option<(usize, usize)> {
    if prefix.iter().all(|&b| b <= 1) {
        cube_binary(prefix)
    } else {
        cube_general(prefix)
    }
}

fn cube_general(s: &[u8]) -> Option<(usize, usize)> {
    let n = s.len();
    for l in 1..=n / 3 {
        let mut run = 0;
        for j in 0..n - l {
            if s[j] == s[j + l] {
                run += 1;
                if run == 2 * l {
                    return Some((j + 1 - 2 * l, l));
                }
            } else {
                run = 0;
            }
        }
    }
    None
}

/// A cube of period l is a run of 2l zeros in `s xor (s >> l)`.
fn cube_binary(s: &[u8]) -> Option<(usize, usize)> {
    let n = s.len();
    let bits = BitVec::from_bits(s);
    for l in 1..=n / 3 {
        let len = n - l;
        let target = 2 * l;
        let words = len.div_ceil(64);
        let mut run = 0usize;
        for w in 0..words {
            let valid = (len - 64 * w).min(64);
            let mut x = bits.word_at(64 * w) ^ bits.word_at(64 * w + l);
            if valid < 64 {
                // positions past the end break any run
                x |= !0u64 << valid;
            }
            if x == 0 {
                run += 64;
                if run >= target {
                    let end = 64 * w + 64 - (run - target);
                    return Some((end - target, l));
                }
                continue;
            }
            let tz = x.trailing_zeros() as usize;
            if run + tz >= target {
                let end = 64 * w + (target - run);
                return Some((end - target, l));
            }
            if target < 64 {
                // short runs can sit inside one word
                let mut pos = tz;
                let mut y = x;
                while y != 0 {
                    y &= y - 1;
                    let next = if y == 0 {
                        64
                    } else {
                        y.trailing_zeros() as usize
                    };
                    if next - pos > target {
                        let start = 64 * w + pos + 1;
                        if start + target <= len {
                            return Some((start, l));
                        }
                    }
                    pos = next;
                }
            }
            run = x.leading_zeros() as usize;
        }
    }
    None
}
