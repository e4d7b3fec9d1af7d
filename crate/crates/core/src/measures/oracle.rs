//! Direct evaluations of each measure from its definition. Slow, independent
//! of the fast paths, and meant for cross-checking them on small inputs.

use std::collections::{HashMap, HashSet};

use crate::algebra::BitVec;

fn sign(b: u8) -> i64 {
    if b == 0 {
        1
    } else {
        -1
    }
}

/// Smallest `M >= 1` such that the next symbol is a function of the previous
/// M throughout the prefix; 0 for `N <= 1`.
pub fn max_order(s: &[u8]) -> usize {
    let n = s.len();
    if n <= 1 {
        return 0;
    }
    (1..n)
        .find(|&m| {
            let mut seen: HashMap<&[u8], u8> = HashMap::new();
            (0..n - m).all(|i| *seen.entry(&s[i..i + m]).or_insert(s[i + m]) == s[i + m])
        })
        .unwrap_or(n - 1)
}

/// Every progression `a, a+b, ..., a+(t-1)b` summed directly.
pub fn well_distribution(s: &[u8]) -> u64 {
    let n = s.len();
    let mut best = 0u64;
    for a in 0..n {
        for b in 1..=n {
            let mut sum = 0i64;
            let mut idx = a;
            while idx < n {
                sum += sign(s[idx]);
                best = best.max(sum.unsigned_abs());
                idx += b;
            }
        }
    }
    best
}

/// Every lag tuple `d_1 < ... < d_k` and window length `M`; `k <= 3`.
pub fn correlation(s: &[u8], k: usize) -> u64 {
    assert!((1..=3).contains(&k), "oracle supports k <= 3");
    let n = s.len();
    let mut best = 0u64;
    let mut visit = |d: &[usize]| {
        let last = d[d.len() - 1];
        let mut sum = 0i64;
        for i in 0..n - last {
            sum += d.iter().map(|&x| sign(s[i + x])).product::<i64>();
            best = best.max(sum.unsigned_abs());
        }
    };
    for d1 in 0..n {
        if k == 1 {
            visit(&[d1]);
            continue;
        }
        for d2 in d1 + 1..n {
            if k == 2 {
                visit(&[d1, d2]);
                continue;
            }
            for d3 in d2 + 1..n {
                visit(&[d1, d2, d3]);
            }
        }
    }
    best
}

fn naive_mul(a: &[u8], b: &[u8]) -> Vec<u8> {
    let n = a.len();
    let mut out = vec![0u8; n];
    for i in 0..n {
        if a[i] == 1 {
            for j in 0..n - i {
                out[i + j] ^= b[j];
            }
        }
    }
    out
}

/// Least total degree of a nonzero `h` over F_2 with `h(x, G) = 0 mod x^N`,
/// searching every polynomial of total degree at most `max_degree`; `None`
/// when there is none. The prefix must be nonzero and binary.
pub fn expansion_binary(s: &[u8], max_degree: usize) -> Option<usize> {
    let n = s.len();
    let mut powers = vec![{
        let mut one = vec![0u8; n];
        one[0] = 1;
        one
    }];
    for j in 1..=max_degree {
        powers.push(naive_mul(&powers[j - 1], s));
    }
    let mut monomials = Vec::new();
    for d in 0..=max_degree {
        for j in 0..=d {
            let i = d - j;
            let mut col = vec![0u8; n];
            for (k, &c) in powers[j].iter().enumerate() {
                if k + i < n {
                    col[k + i] = c;
                }
            }
            monomials.push((d, BitVec::from_bits(&col)));
        }
    }
    // walk all subsets in Gray-code order, one column flip per step
    let m = monomials.len();
    let mut acc = BitVec::zeros(n);
    let mut best: Option<usize> = None;
    for i in 1u64..(1 << m) {
        let flip = i.trailing_zeros() as usize;
        acc.xor_assign(&monomials[flip].1);
        let gray = i ^ (i >> 1);
        if acc.is_zero() {
            let top = 63 - gray.leading_zeros() as usize;
            let deg = monomials[top].0;
            best = Some(best.map_or(deg, |b| b.min(deg)));
        }
    }
    best
}

/// First cube `www`, shortest `w` then leftmost, by comparing slices.
pub fn first_cube(s: &[u8]) -> Option<(usize, usize)> {
    let n = s.len();
    for l in 1..=n / 3 {
        for start in 0..=n - 3 * l {
            let w = &s[start..start + l];
            if w == &s[start + l..start + 2 * l] && w == &s[start + 2 * l..start + 3 * l] {
                return Some((start, l));
            }
        }
    }
    None
}

/// Distinct windows of each length `1..=k_max`, by hashing.
pub fn subword_counts(s: &[u8], k_max: usize) -> Vec<u64> {
    (1..=k_max)
        .map(|k| {
            if k > s.len() {
                0
            } else {
                s.windows(k).collect::<HashSet<_>>().len() as u64
            }
        })
        .collect()
}
