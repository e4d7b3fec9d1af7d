//! Well-distribution measure: the largest +-1 sum along an arithmetic
//! progression inside the prefix.

use rayon::prelude::*;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WellDistribution {
    pub value: u64,
    /// progression `a, a+b, ..., a+(t-1)b` attaining the value
    pub a: usize,
    pub b: usize,
    pub t: usize,
}

pub(crate) fn signs(prefix: &[u8]) -> Result<Vec<i32>> {
    prefix
        .iter()
        .enumerate()
        .map(|(position, &s)| match s {
            0 => Ok(1),
            1 => Ok(-1),
            symbol => Err(Error::NonBinary { symbol, position }),
        })
        .collect()
}

/// Exact `W(s, N)` with a witness. For each step `b` and residue class, the
/// best run is the spread between the largest and smallest prefix sum.
pub fn well_distribution(prefix: &[u8]) -> Result<WellDistribution> {
    let x = signs(prefix)?;
    let n = x.len();
    let mut best = WellDistribution {
        value: 0,
        a: 0,
        b: 1,
        t: 0,
    };
    for b in 1..n.max(2) {
        for r in 0..b.min(n) {
            // prefix sums P_0 = 0, P_j over the class elements r, r+b, ...
            let (mut sum, mut hi, mut lo) = (0i64, (0i64, 0usize), (0i64, 0usize));
            let mut j = 0usize;
            let mut idx = r;
            while idx < n {
                sum += x[idx] as i64;
                j += 1;
                if sum > hi.0 {
                    hi = (sum, j);
                }
                if sum < lo.0 {
                    lo = (sum, j);
                }
                idx += b;
            }
            let value = (hi.0 - lo.0) as u64;
            if value > best.value {
                let (j0, j1) = if hi.1 < lo.1 {
                    (hi.1, lo.1)
                } else {
                    (lo.1, hi.1)
                };
                best = WellDistribution {
                    value,
                    a: r + j0 * b,
                    b,
                    t: j1 - j0,
                };
            }
        }
    }
    Ok(best)
}

/// `W(s, n)` for `n = 1..=N`. The progressions that are new at length `n` all
/// end at `n-1`, so each step adds a backward walk per `b`.
pub fn well_distribution_profile(prefix: &[u8]) -> Result<Vec<u64>> {
    let x = signs(prefix)?;
    let fresh: Vec<u64> = (0..x.len())
        .into_par_iter()
        .map(|last| {
            let mut best = 1u64;
            for b in 1..=last {
                let mut sum = 0i64;
                let mut idx = last as isize;
                while idx >= 0 {
                    sum += x[idx as usize] as i64;
                    best = best.max(sum.unsigned_abs());
                    idx -= b as isize;
                }
            }
            best
        })
        .collect();
    let mut out = Vec::with_capacity(fresh.len());
    let mut acc = 0u64;
    for v in fresh {
        acc = acc.max(v);
        out.push(acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::oracle;
    use proptest::prelude::*;

    #[test]
    fn constant_and_alternating() {
        let w = well_distribution(&[0; 12]).unwrap();
        assert_eq!((w.value, w.a, w.b, w.t), (12, 0, 1, 12));
        let alt: Vec<u8> = (0..10).map(|i| (i % 2) as u8).collect();
        assert_eq!(well_distribution(&alt).unwrap().value, 5);
        assert_eq!(oracle::well_distribution(&alt), 5);
        assert!(well_distribution(&[0, 2]).is_err());
        assert_eq!(well_distribution(&[]).unwrap().value, 0);
    }

    proptest! {
        #[test]
        fn witness_and_oracle(raw in prop::collection::vec(any::<bool>(), 1..64)) {
            let s: Vec<u8> = raw.iter().map(|&b| b as u8).collect();
            let w = well_distribution(&s).unwrap();
            prop_assert_eq!(w.value, oracle::well_distribution(&s));
            prop_assert!(w.a + (w.t - 1) * w.b < s.len());
            let sum: i64 = (0..w.t).map(|j| if s[w.a + j * w.b] == 0 { 1 } else { -1 }).sum();
            prop_assert_eq!(sum.unsigned_abs(), w.value);
            let profile = well_distribution_profile(&s).unwrap();
            for n in 1..=s.len() {
                prop_assert_eq!(profile[n - 1], oracle::well_distribution(&s[..n]));
            }
        }
    }
}
