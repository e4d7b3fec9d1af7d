//! Linear complexity via Berlekamp-Massey, and the bounds that follow from an
//! annihilating polynomial.

use num_rational::Ratio;

use crate::algebra::{BiPoly, BitVec, Fp};
use crate::error::{Error, Result};

/// Profile `L(1..N)` and the final shortest recurrence
/// `sum_{l=t}^{L} c_l s_{i+l} = 0`, `0 <= i <= N-L-1`, with `c_L = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearComplexityRecord {
    /// `profile[n-1] = L(s, n)`
    pub profile: Vec<usize>,
    /// `c_0, ..., c_L`
    pub connection: Vec<u32>,
    /// lowest index with `c_t != 0`
    pub t: usize,
}

impl LinearComplexityRecord {
    pub fn value(&self) -> usize {
        self.profile.last().copied().unwrap_or(0)
    }
}

fn check_symbols(prefix: &[u8], fp: &Fp) -> Result<()> {
    match prefix.iter().enumerate().find(|(_, &s)| s as u32 >= fp.p()) {
        Some((position, &symbol)) => Err(Error::SymbolOutOfField {
            symbol,
            position,
            p: fp.p(),
        }),
        None => Ok(()),
    }
}

/// Berlekamp-Massey over F_p; symbols must be below p.
pub fn linear_complexity(prefix: &[u8], fp: Fp) -> Result<LinearComplexityRecord> {
    check_symbols(prefix, &fp)?;
    let (profile, c) = if fp.p() == 2 {
        bm_binary(prefix)
    } else {
        bm_general(prefix, &fp)
    };
    let l = profile.last().copied().unwrap_or(0);
    // c holds C(D) = 1 + C_1 D + ... ; the recurrence coefficient c_l is C_{L-l}
    let connection: Vec<u32> = (0..=l)
        .map(|i| c.get(l - i).copied().unwrap_or(0))
        .collect();
    let t = connection.iter().position(|&x| x != 0).expect("c_L = 1");
    Ok(LinearComplexityRecord {
        profile,
        connection,
        t,
    })
}

fn bm_general(s: &[u8], f: &Fp) -> (Vec<usize>, Vec<u32>) {
    let n_total = s.len();
    let mut c = vec![0u32; n_total + 1];
    let mut b = vec![0u32; n_total + 1];
    c[0] = 1;
    b[0] = 1;
    let (mut l, mut m, mut bd) = (0usize, 1usize, 1u32);
    let mut profile = Vec::with_capacity(n_total);
    for n in 0..n_total {
        let mut d = s[n] as u32;
        for i in 1..=l {
            if c[i] != 0 {
                d = f.add(d, f.mul(c[i], s[n - i] as u32));
            }
        }
        if d == 0 {
            m += 1;
        } else {
            let coef = f.mul(d, f.inv(bd));
            let old = (2 * l <= n).then(|| c.clone());
            for i in 0..=n_total - m {
                if b[i] != 0 {
                    c[i + m] = f.sub(c[i + m], f.mul(coef, b[i]));
                }
            }
            if let Some(old) = old {
                l = n + 1 - l;
                b = old;
                bd = d;
                m = 1;
            } else {
                m += 1;
            }
        }
        profile.push(l);
    }
    c.truncate(l + 1);
    (profile, c)
}

fn bm_binary(s: &[u8]) -> (Vec<usize>, Vec<u32>) {
    let n_total = s.len();
    let rev: Vec<u8> = s.iter().rev().copied().collect();
    let r = BitVec::from_bits(&rev);
    let mut c = BitVec::zeros(n_total + 1);
    let mut b = BitVec::zeros(n_total + 1);
    c.set(0, true);
    b.set(0, true);
    let (mut l, mut m) = (0usize, 1usize);
    let mut profile = Vec::with_capacity(n_total);
    for n in 0..n_total {
        // s_{n-i} sits at bit N-1-n+i of the reversed sequence
        let off = n_total - 1 - n;
        let mut acc = 0u64;
        for (w, &cw) in c.words().iter().enumerate().take(l / 64 + 1) {
            acc ^= cw & r.word_at(off + 64 * w);
        }
        if acc.count_ones().is_multiple_of(2) {
            m += 1;
        } else if 2 * l <= n {
            let old = c.clone();
            c.xor_shifted(&b, m);
            l = n + 1 - l;
            b = old;
            m = 1;
        } else {
            c.xor_shifted(&b, m);
            m += 1;
        }
        profile.push(l);
    }
    let c = (0..=l).map(|i| c.get(i) as u32).collect();
    (profile, c)
}

/// Bounds on `L(s, N)` from an annihilator `h = sum_{i<=d} h_i(x) y^i` with no
/// rational zero: `(N-M)/d <= L <= ((d-1)N + M + 1)/d`, `M = max(deg h_i - i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearBounds {
    pub lower: Ratio<i64>,
    pub upper: Ratio<i64>,
    pub d: usize,
    pub m: i64,
}

impl LinearBounds {
    pub fn lower_int(&self) -> i64 {
        self.lower.ceil().to_integer()
    }

    pub fn upper_int(&self) -> i64 {
        self.upper.floor().to_integer()
    }

    pub fn contains(&self, l: usize) -> bool {
        let l = Ratio::from_integer(l as i64);
        self.lower <= l && l <= self.upper
    }
}

/// The caller is responsible for `h` annihilating the sequence and having no
/// rational zero; neither is checked here.
pub fn linear_complexity_bounds(h: &BiPoly, n: usize) -> Result<LinearBounds> {
    let d = h.y_degree().finite().ok_or(Error::ZeroPolynomial)?;
    let m = h.shift_degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::InvalidParameter("annihilator must involve y".into()));
    }
    let (n, di) = (n as i64, d as i64);
    Ok(LinearBounds {
        lower: Ratio::new(n - m, di),
        upper: Ratio::new((di - 1) * n + m + 1, di),
        d,
        m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Shortest recurrence length by trying every L and every coefficient
    /// vector; tiny inputs only.
    fn brute_linear_complexity(s: &[u8], p: u32) -> usize {
        let f = Fp::new(p).unwrap();
        let n = s.len();
        if s.iter().all(|&x| x == 0) {
            return 0;
        }
        for l in 0..=n {
            let count = (p as usize).pow(l as u32);
            for code in 0..count {
                let mut coef = vec![0u32; l];
                let mut rest = code;
                for c in coef.iter_mut() {
                    *c = (rest % p as usize) as u32;
                    rest /= p as usize;
                }
                let ok = (0..n.saturating_sub(l)).all(|i| {
                    let pred = (0..l).fold(0, |acc, j| f.add(acc, f.mul(coef[j], s[i + j] as u32)));
                    pred == s[i + l] as u32
                });
                if ok {
                    return l;
                }
            }
        }
        n
    }

    fn recurrence_holds(rec: &LinearComplexityRecord, s: &[u8], f: &Fp) -> bool {
        let l = rec.value();
        (0..s.len().saturating_sub(l)).all(|i| {
            rec.connection
                .iter()
                .enumerate()
                .fold(0, |acc, (j, &c)| f.add(acc, f.mul(c, s[i + j] as u32)))
                == 0
        })
    }

    #[test]
    fn conventions() {
        let f2 = Fp::new(2).unwrap();
        assert_eq!(linear_complexity(&[0, 0, 0, 1], f2).unwrap().value(), 4);
        assert_eq!(linear_complexity(&[0, 0, 0, 0], f2).unwrap().value(), 0);
        assert_eq!(linear_complexity(&[], f2).unwrap().value(), 0);
        assert!(linear_complexity(&[0, 3], Fp::new(3).unwrap()).is_err());
    }

    #[test]
    fn thue_morse_small_values() {
        let t: Vec<u8> = (0u32..16).map(|n| (n.count_ones() % 2) as u8).collect();
        let rec = linear_complexity(&t[..10], Fp::new(2).unwrap()).unwrap();
        assert_eq!(rec.value(), 6);
    }

    #[test]
    fn bounds_for_known_pairs() {
        let f2 = Fp::new(2).unwrap();
        let h = BiPoly::new(f2, [(0, 0, 1), (1, 1, 1), (0, 3, 1)]);
        let b = linear_complexity_bounds(&h, 10).unwrap();
        assert_eq!((b.d, b.m), (3, 0));
        assert_eq!((b.lower_int(), b.upper_int()), (4, 7));
        assert!(linear_complexity_bounds(&BiPoly::new(f2, []), 10).is_err());
    }

    proptest! {
        #[test]
        fn matches_brute_force(p in prop::sample::select(vec![2u32, 3]), raw in prop::collection::vec(any::<u8>(), 0..9)) {
            let s: Vec<u8> = raw.iter().map(|&x| x % p as u8).collect();
            let f = Fp::new(p).unwrap();
            let rec = linear_complexity(&s, f).unwrap();
            for n in 1..=s.len() {
                prop_assert_eq!(rec.profile[n - 1], brute_linear_complexity(&s[..n], p));
            }
        }

        #[test]
        fn profile_invariants(p in prop::sample::select(vec![2u32, 3, 5, 7]), raw in prop::collection::vec(any::<u8>(), 1..300)) {
            let s: Vec<u8> = raw.iter().map(|&x| x % p as u8).collect();
            let f = Fp::new(p).unwrap();
            let rec = linear_complexity(&s, f).unwrap();
            let mut prev = 0;
            for (i, &l) in rec.profile.iter().enumerate() {
                prop_assert!(l <= i + 1);
                prop_assert!(l >= prev);
                prop_assert!(l == prev || l == i + 1 - prev);
                prev = l;
            }
            prop_assert_eq!(*rec.connection.last().unwrap(), 1);
            prop_assert!(recurrence_holds(&rec, &s, &f));
            prop_assert!(rec.connection[rec.t] != 0);
        }

        #[test]
        fn binary_path_matches_general(raw in prop::collection::vec(any::<bool>(), 0..400)) {
            let s: Vec<u8> = raw.iter().map(|&b| b as u8).collect();
            let (pa, ca) = bm_binary(&s);
            let (pb, cb) = bm_general(&s, &Fp::new(2).unwrap());
            prop_assert_eq!(pa, pb);
            prop_assert_eq!(ca, cb);
        }
    }
}
