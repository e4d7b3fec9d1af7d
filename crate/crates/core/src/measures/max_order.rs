//! Maximum-order complexity: the shortest memory for which some function of
//! the last M symbols predicts every next symbol of the prefix.

use super::suffix::SuffixAutomaton;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxOrderRecord {
    /// `profile[n-1] = M(s, n)`
    pub profile: Vec<usize>,
    /// `(n1, n2, len)`: the factors of length `len` at `n1` and `n2` agree
    /// and are followed by different symbols; `len = M - 1`.
    pub witness: Option<(usize, usize, usize)>,
}

impl MaxOrderRecord {
    pub fn value(&self) -> usize {
        self.profile.last().copied().unwrap_or(0)
    }
}

/// Profile of `M(s, n)` for `n = 1..=N`. `M = 0` for `N <= 1` and `M = 1`
/// when no factor has two distinct successors.
pub fn max_order_complexity(prefix: &[u8]) -> MaxOrderRecord {
    let alpha = prefix.iter().copied().max().map_or(1, |m| m as usize + 1);
    let mut sam = SuffixAutomaton::with_capacity(alpha, prefix.len());
    let mut profile = Vec::with_capacity(prefix.len());
    let mut best: Option<usize> = None;
    let mut witness = None;
    for (i, &c) in prefix.iter().enumerate() {
        if let Some(b) = sam.extend(c) {
            if best.is_none_or(|l| b.len > l) {
                best = Some(b.len);
                // the second occurrence ends just before the new symbol at i
                witness = Some((b.first_end + 1 - b.len, i - b.len, b.len));
            }
        }
        let n = i + 1;
        profile.push(match (n, best) {
            (0 | 1, _) => 0,
            (_, None) => 1,
            (_, Some(l)) => l + 1,
        });
    }
    MaxOrderRecord { profile, witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::oracle;
    use proptest::prelude::*;

    fn thue_morse(n: usize) -> Vec<u8> {
        (0..n as u32).map(|i| (i.count_ones() % 2) as u8).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(max_order_complexity(&[]).value(), 0);
        assert_eq!(max_order_complexity(&[1]).value(), 0);
        assert_eq!(max_order_complexity(&[0, 0, 0, 0]).value(), 1);
        assert_eq!(max_order_complexity(&thue_morse(4)).value(), 2);
        assert_eq!(max_order_complexity(&thue_morse(21)).value(), 9);
    }

    #[test]
    fn witness_is_a_conflict() {
        let s = thue_morse(300);
        let rec = max_order_complexity(&s);
        let (a, b, l) = rec.witness.unwrap();
        assert_eq!(l + 1, rec.value());
        assert!(a < b);
        assert_eq!(s[a..a + l], s[b..b + l]);
        assert_ne!(s[a + l], s[b + l]);
    }

    proptest! {
        #[test]
        fn matches_brute_force(alpha in 1u8..4, raw in prop::collection::vec(any::<u8>(), 0..120)) {
            let s: Vec<u8> = raw.iter().map(|&x| x % alpha).collect();
            let rec = max_order_complexity(&s);
            for n in 0..=s.len() {
                let expect = oracle::max_order(&s[..n]);
                let got = if n == 0 { 0 } else { rec.profile[n - 1] };
                prop_assert_eq!(got, expect, "n={}", n);
            }
        }
    }
}
