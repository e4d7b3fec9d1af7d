//! Expansion complexity: the least total degree of a nonzero h(x, y) with
//! h(x, G(x)) = 0 mod x^N.

use rayon::prelude::*;

use super::linear::linear_complexity;
use crate::algebra::{series_from_sequence, BiPoly, ColumnBasis, Fp, TruncatedSeries};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionSample {
    pub n: usize,
    pub value: usize,
    /// `None` for an all-zero prefix, where the value is 0 by convention
    pub witness: Option<BiPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionRecord {
    pub samples: Vec<ExpansionSample>,
}

impl ExpansionRecord {
    /// Smallest sampled N from which every later sample equals `target`.
    pub fn threshold(&self, target: usize) -> Option<usize> {
        let mut n0 = None;
        for s in self.samples.iter().rev() {
            if s.value != target {
                break;
            }
            n0 = Some(s.n);
        }
        n0
    }

    pub fn max_value(&self) -> usize {
        self.samples.iter().map(|s| s.value).max().unwrap_or(0)
    }
}

/// Monomials `x^i y^j` in insertion order: by total degree, then by `j`.
fn monomials_of_degree(d: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=d).map(move |j| (d - j, j))
}

/// `E(s, N)` for one N, given `G^0, G^1, ...` at precision at least N; more
/// powers are appended when needed.
fn expansion_at(powers: &mut Vec<TruncatedSeries>, n: usize) -> ExpansionSample {
    let g = &powers[1];
    let fp = *g.field();
    if g.truncate(n).is_zero() {
        return ExpansionSample {
            n,
            value: 0,
            witness: None,
        };
    }
    let mut basis = ColumnBasis::new(fp, n);
    let mut cols: Vec<(usize, usize)> = Vec::new();
    for d in 0.. {
        for (i, j) in monomials_of_degree(d) {
            while powers.len() <= j {
                let next = powers[powers.len() - 1]
                    .mul(&powers[1])
                    .expect("same context");
                powers.push(next);
            }
            let mut col = TruncatedSeries::zero(fp, n);
            col.add_scaled_shifted(&powers[j].truncate(n), 1, i);
            cols.push((i, j));
            if let Some(v) = basis.push_series(&col) {
                let terms = cols.iter().zip(&v).map(|(&(i, j), &c)| (i, j, c));
                return ExpansionSample {
                    n,
                    value: d,
                    witness: Some(BiPoly::new(fp, terms)),
                };
            }
        }
    }
    unreachable!("columns outnumber rows once (d+1)(d+2)/2 > N")
}

/// `E(s, N)` at each requested N (each at most the prefix length).
pub fn expansion_complexity(prefix: &[u8], fp: Fp, samples: &[usize]) -> Result<ExpansionRecord> {
    if let Some(&bad) = samples.iter().find(|&&n| n > prefix.len() || n == 0) {
        return Err(Error::InvalidParameter(format!(
            "sample N = {bad} outside 1..={}",
            prefix.len()
        )));
    }
    let n_max = samples.iter().copied().max().unwrap_or(0);
    let g = series_from_sequence(&prefix[..n_max], fp)?;
    // the largest N needs the most powers; computing it first lets the rest share them
    let mut powers = vec![TruncatedSeries::one(fp, n_max), g];
    if n_max > 0 {
        expansion_at(&mut powers, n_max);
    }
    let powers = powers;
    let out: Vec<ExpansionSample> = samples
        .par_iter()
        .map(|&n| {
            let mut local = powers.clone();
            expansion_at(&mut local, n)
        })
        .collect();
    Ok(ExpansionRecord { samples: out })
}

/// Bounds on `E(s, N)` from the N-th linear complexity `L` and the lowest
/// index `t` of the shortest recurrence found by Berlekamp-Massey.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionBounds {
    pub lower: usize,
    pub upper: usize,
    pub l: usize,
    pub t: usize,
}

pub fn expansion_bounds_from_linear(prefix: &[u8], fp: Fp) -> Result<ExpansionBounds> {
    let rec = linear_complexity(prefix, fp)?;
    if rec.value() == 0 {
        return Err(Error::AllZeroPrefix);
    }
    let (n, l, t) = (prefix.len() as i64, rec.value() as i64, rec.t as i64);
    let q = l - 1.min(t - 1);
    let lower = if n > (l - t) * q {
        l - t + 1
    } else {
        (n + q - 1) / q
    };
    let upper = (l + (-1i64).max(1 - t)).min(n - l + 2);
    Ok(ExpansionBounds {
        lower: lower as usize,
        upper: upper as usize,
        l: rec.value(),
        t: rec.t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bipoly_eval_mod;
    use crate::measures::oracle;
    use proptest::prelude::*;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn constant_one() {
        let rec = expansion_complexity(&[1, 0, 0, 0], f2(), &[4]).unwrap();
        let s = &rec.samples[0];
        assert_eq!(s.value, 1);
        assert_eq!(s.witness.as_ref().unwrap().to_string(), "1 + y");
        let b = expansion_bounds_from_linear(&[1, 0, 0, 0], f2()).unwrap();
        assert!(b.lower <= 1 && 1 <= b.upper);
    }

    #[test]
    fn all_zero_is_zero() {
        let rec = expansion_complexity(&[0; 10], f2(), &[1, 5, 10]).unwrap();
        assert!(rec
            .samples
            .iter()
            .all(|s| s.value == 0 && s.witness.is_none()));
        assert_eq!(rec.threshold(0), Some(1));
        assert_eq!(
            expansion_bounds_from_linear(&[0; 10], f2()),
            Err(Error::AllZeroPrefix)
        );
    }

    #[test]
    fn thue_morse_witness_vanishes() {
        let t: Vec<u8> = (0u32..256).map(|n| (n.count_ones() % 2) as u8).collect();
        let samples: Vec<usize> = (2..=256).collect();
        let rec = expansion_complexity(&t, f2(), &samples).unwrap();
        let mut prev = 0;
        for s in &rec.samples {
            assert!(s.value >= prev);
            prev = s.value;
            let h = s.witness.as_ref().unwrap();
            let g = series_from_sequence(&t[..s.n], f2()).unwrap();
            assert!(bipoly_eval_mod(h, &g).unwrap().is_zero());
            assert!(s.value * (s.value + 1) / 2 <= s.n);
        }
        assert_eq!(rec.max_value(), 5);
    }

    proptest! {
        #[test]
        fn matches_exhaustive_search(raw in prop::collection::vec(any::<bool>(), 1..=20)) {
            let s: Vec<u8> = raw.iter().map(|&b| b as u8).collect();
            prop_assume!(s.contains(&1));
            let rec = expansion_complexity(&s, f2(), &[s.len()]).unwrap();
            let e = rec.samples[0].value;
            prop_assert_eq!(oracle::expansion_binary(&s, 3), if e <= 3 { Some(e) } else { None });
        }

        #[test]
        fn bounds_bracket(p in prop::sample::select(vec![2u32, 3]), raw in prop::collection::vec(any::<u8>(), 2..80)) {
            let s: Vec<u8> = raw.iter().map(|&x| x % p as u8).collect();
            prop_assume!(s.iter().any(|&x| x != 0));
            let f = Fp::new(p).unwrap();
            let e = expansion_complexity(&s, f, &[s.len()]).unwrap().samples[0].value;
            let b = expansion_bounds_from_linear(&s, f).unwrap();
            prop_assert!(b.lower <= e && e <= b.upper, "{:?} E={}", b, e);
        }
    }
}
