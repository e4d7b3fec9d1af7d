//! Correlation measure of order k and the lower bounds tied to automata and
//! state complexity.

use num_rational::Ratio;
use rayon::prelude::*;

use super::well_distribution::signs;
use crate::error::{Error, Result};
use crate::seq::AutomatonSpec;

/// Default bound on the number of lag tuples searched in exact mode.
pub const DEFAULT_TUPLE_CAP: u128 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorrelationQuery {
    pub k: usize,
    /// largest lag `d_k - d_1` searched; the result is then a lower bound
    pub max_lag: Option<usize>,
    /// exact mode for `k >= 4` requires the tuple count to stay below this
    pub tuple_cap: u128,
}

impl CorrelationQuery {
    pub fn new(k: usize) -> Self {
        Self {
            k,
            max_lag: None,
            tuple_cap: DEFAULT_TUPLE_CAP,
        }
    }

    pub fn with_max_lag(mut self, max_lag: usize) -> Self {
        self.max_lag = Some(max_lag);
        self
    }

    pub fn with_tuple_cap(mut self, cap: u128) -> Self {
        self.tuple_cap = cap;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correlation {
    pub value: u64,
    /// window length
    pub m: usize,
    /// lags `d_1 < ... < d_k`
    pub d: Vec<usize>,
    /// true when lags were capped, so `value` only bounds `C_k` from below
    pub lower_bound_only: bool,
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Best window of the product sequence: `(max - min of prefix sums, start, len)`.
fn best_window(prod: &[i32]) -> (u64, usize, usize) {
    let (mut sum, mut hi, mut lo) = (0i64, (0i64, 0usize), (0i64, 0usize));
    for (j, &v) in prod.iter().enumerate() {
        sum += v as i64;
        if sum > hi.0 {
            hi = (sum, j + 1);
        }
        if sum < lo.0 {
            lo = (sum, j + 1);
        }
    }
    let (a, b) = if hi.1 < lo.1 {
        (hi.1, lo.1)
    } else {
        (lo.1, hi.1)
    };
    ((hi.0 - lo.0) as u64, a, b - a)
}

/// Enumerates the relative lags `0 = e_1 < e_2 < ... < e_k <= max`.
fn for_each_tuple(k: usize, max: usize, mut f: impl FnMut(&[usize])) {
    if k == 0 {
        return;
    }
    let mut e = vec![0usize; k];
    fn rec(e: &mut Vec<usize>, pos: usize, max: usize, f: &mut dyn FnMut(&[usize])) {
        if pos == e.len() {
            f(e);
            return;
        }
        // leave room for the remaining strictly increasing entries
        let remaining = e.len() - pos - 1;
        let start = e[pos - 1] + 1;
        for v in start..=max.saturating_sub(remaining) {
            e[pos] = v;
            rec(e, pos + 1, max, f);
        }
    }
    rec(&mut e, 1, max, &mut f);
}

/// `C_k(s, N)` with a witness `(M, D)`.
pub fn correlation(prefix: &[u8], q: &CorrelationQuery) -> Result<Correlation> {
    if q.k == 0 {
        return Err(Error::InvalidParameter(
            "correlation order must be at least 1".into(),
        ));
    }
    let x = signs(prefix)?;
    let n = x.len();
    if let Some(lag) = q.max_lag {
        if lag + 1 < q.k {
            return Err(Error::InvalidParameter(format!(
                "lag cap {lag} is below k-1 = {}",
                q.k - 1
            )));
        }
    }
    let max_rel = match q.max_lag {
        Some(l) => l.min(n.saturating_sub(1)),
        None => n.saturating_sub(1),
    };
    let capped = q.max_lag.is_some_and(|l| l < n.saturating_sub(1));
    if q.k >= 4 && !capped {
        let tuples = binomial(max_rel as u128, q.k as u128 - 1);
        if tuples > q.tuple_cap {
            return Err(Error::CapExceeded {
                size: tuples,
                cap: q.tuple_cap,
            });
        }
    }
    let mut best = Correlation {
        value: 0,
        m: 0,
        d: Vec::new(),
        lower_bound_only: capped,
    };
    if n < q.k {
        return Ok(best);
    }
    let mut prod = Vec::with_capacity(n);
    for_each_tuple(q.k, max_rel, |e| {
        let span = e[q.k - 1];
        prod.clear();
        prod.extend((0..n - span).map(|i| e.iter().map(|&d| x[i + d]).product::<i32>()));
        let (value, start, len) = best_window(&prod);
        if value > best.value {
            best.value = value;
            best.m = len;
            best.d = e.iter().map(|&d| d + start).collect();
        }
    });
    Ok(best)
}

/// `C_2(s, n)` for `n = 1..=N`, using running sums per lag.
pub fn correlation2_profile(prefix: &[u8]) -> Result<Vec<u64>> {
    let x = signs(prefix)?;
    let n = x.len();
    // value of lag delta at every length where it gains a term
    let per_lag: Vec<Vec<u64>> = (1..n)
        .into_par_iter()
        .map(|delta| {
            let (mut sum, mut hi, mut lo) = (0i64, 0i64, 0i64);
            (0..n - delta)
                .map(|i| {
                    sum += (x[i] * x[i + delta]) as i64;
                    hi = hi.max(sum);
                    lo = lo.min(sum);
                    (hi - lo) as u64
                })
                .collect()
        })
        .collect();
    let mut out = vec![0u64; n];
    for (delta, vals) in per_lag.iter().enumerate() {
        // the i-th entry of lag delta+1 becomes available at length i + delta + 2
        for (i, &v) in vals.iter().enumerate() {
            let len = i + delta + 2;
            out[len - 1] = out[len - 1].max(v);
        }
    }
    let mut acc = 0;
    for v in out.iter_mut() {
        acc = acc.max(*v);
        *v = acc;
    }
    Ok(out)
}

/// `N / (k (|Q| + 1))` for the sequence of a base-k automaton.
pub fn automaton_correlation_bound(a: &AutomatonSpec, n: usize) -> Result<Ratio<i64>> {
    let den = a.base() as i64 * (a.num_states() as i64 + 1);
    if (n as i64) < den {
        return Err(Error::BelowThreshold {
            n,
            threshold: den as usize,
        });
    }
    Ok(Ratio::new(n as i64, den))
}

/// `N / (k C_2(s, N)) - 1`, a lower bound for the state complexity.
pub fn state_complexity_lower_bound(prefix: &[u8], k: usize) -> Result<Ratio<i64>> {
    let n = prefix.len();
    if n < 3 {
        return Err(Error::BelowThreshold { n, threshold: 3 });
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let c2 = correlation(prefix, &CorrelationQuery::new(2))?.value;
    assert!(c2 > 0, "C_2 of a +-1 sequence of length >= 3 is positive");
    Ok(Ratio::new(n as i64, k as i64 * c2 as i64) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::oracle;
    use crate::seq::Catalog;
    use proptest::prelude::*;

    #[test]
    fn constant_prefix() {
        let c = correlation(&[0; 20], &CorrelationQuery::new(2)).unwrap();
        assert_eq!((c.value, c.m, c.d.clone()), (19, 19, vec![0, 1]));
        assert_eq!(correlation2_profile(&[0; 20]).unwrap()[19], 19);
        let sc = state_complexity_lower_bound(&[0; 20], 2).unwrap();
        assert_eq!(sc, Ratio::new(20, 38) - 1);
    }

    #[test]
    fn caps() {
        let s = vec![0u8; 200];
        assert!(matches!(
            correlation(&s, &CorrelationQuery::new(4).with_tuple_cap(1000)),
            Err(Error::CapExceeded { .. })
        ));
        let c = correlation(&s, &CorrelationQuery::new(4).with_max_lag(5)).unwrap();
        assert!(c.lower_bound_only);
        assert_eq!(c.value, 197);
        assert!(correlation(&s, &CorrelationQuery::new(4).with_max_lag(2)).is_err());
    }

    #[test]
    fn automaton_bound() {
        let tm = Catalog::ThueMorse.automaton().unwrap();
        assert_eq!(
            automaton_correlation_bound(&tm, 600).unwrap(),
            Ratio::from_integer(100)
        );
        assert!(automaton_correlation_bound(&tm, 5).is_err());
        let rs = Catalog::RudinShapiro.automaton().unwrap();
        assert_eq!(
            automaton_correlation_bound(&rs, 1000).unwrap(),
            Ratio::from_integer(100)
        );
    }

    proptest! {
        #[test]
        fn matches_naive(k in 1usize..=3, raw in prop::collection::vec(any::<bool>(), 0..24)) {
            let s: Vec<u8> = raw.iter().map(|&b| b as u8).collect();
            let c = correlation(&s, &CorrelationQuery::new(k)).unwrap();
            prop_assert_eq!(c.value, oracle::correlation(&s, k));
            if c.value > 0 {
                let sum: i64 = (0..c.m)
                    .map(|i| c.d.iter().map(|&d| if s[i + d] == 0 { 1i64 } else { -1 }).product::<i64>())
                    .sum();
                prop_assert_eq!(sum.unsigned_abs(), c.value);
            }
        }

        #[test]
        fn profile_matches_pointwise(raw in prop::collection::vec(any::<bool>(), 0..60)) {
            let s: Vec<u8> = raw.iter().map(|&b| b as u8).collect();
            let prof = correlation2_profile(&s).unwrap();
            for n in 1..=s.len() {
                prop_assert_eq!(prof[n - 1], correlation(&s[..n], &CorrelationQuery::new(2)).unwrap().value);
            }
        }
    }
}
