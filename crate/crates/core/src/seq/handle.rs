//! Sequence handles: catalog generators and subsequence transforms.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::automaton::AutomatonSpec;
use super::catalog::Catalog;
use super::digits::zeckendorf_big;
use super::floor_power::FloorPower;
use super::sieve::PrimeCache;
use crate::error::{Error, Result};

/// An index into a sequence. Most indices fit in 128 bits; geometric and
/// high-degree polynomial subsequences leave that range quickly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Index {
    Small(u128),
    Big(BigUint),
}

impl Index {
    fn from_big(b: BigUint) -> Self {
        match b.to_u128() {
            Some(s) => Index::Small(s),
            None => Index::Big(b),
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        match self {
            Index::Small(s) => BigUint::from(*s),
            Index::Big(b) => b.clone(),
        }
    }
}

/// Maps a subsequence position `n` to an index into the base sequence.
#[derive(Debug, Clone)]
pub enum IndexMap {
    /// `f(n)` for an integer polynomial, constant term first.
    Polynomial(Vec<i64>),
    /// the `n`-th prime, starting at 2
    Primes(Arc<PrimeCache>),
    /// `floor(n^c)`
    FloorPower(FloorPower),
    /// `g^n`
    Geometric(u64),
}

impl IndexMap {
    pub fn index(&self, n: u64) -> Result<Index> {
        match self {
            IndexMap::Polynomial(coeffs) => eval_poly(coeffs, n),
            IndexMap::Primes(cache) => Ok(Index::Small(cache.nth(n as usize) as u128)),
            IndexMap::FloorPower(fp) => Ok(Index::from_big(fp.floor(n))),
            IndexMap::Geometric(g) => {
                let small = u32::try_from(n)
                    .ok()
                    .and_then(|e| (*g as u128).checked_pow(e));
                Ok(match small {
                    Some(v) => Index::Small(v),
                    None => Index::Big(BigUint::from(*g).pow(n as u32)),
                })
            }
        }
    }
}

impl fmt::Display for IndexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexMap::Polynomial(c) => {
                write!(f, "poly:")?;
                for (i, a) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                Ok(())
            }
            IndexMap::Primes(_) => write!(f, "primes"),
            IndexMap::FloorPower(fp) => write!(f, "floor:{fp}"),
            IndexMap::Geometric(g) => write!(f, "geom:{g}"),
        }
    }
}

fn eval_poly(coeffs: &[i64], n: u64) -> Result<Index> {
    let x = n as i128;
    let mut acc: Option<i128> = Some(0);
    for &c in coeffs.iter().rev() {
        acc = acc
            .and_then(|a| a.checked_mul(x))
            .and_then(|a| a.checked_add(c as i128));
    }
    let value = match acc {
        Some(v) => BigInt::from(v),
        None => {
            let x = BigInt::from(n);
            coeffs.iter().rev().fold(BigInt::zero(), |a, &c| a * &x + c)
        }
    };
    match value.sign() {
        Sign::Minus => Err(Error::NegativeIndex {
            n,
            value: value.to_string(),
        }),
        _ => Ok(Index::from_big(value.to_biguint().expect("non-negative"))),
    }
}

#[derive(Debug)]
enum Generator {
    Catalog {
        entry: Catalog,
        automaton: Option<AutomatonSpec>,
    },
    Transform {
        base: SequenceHandle,
        map: IndexMap,
    },
}

/// A named, immutable sequence generator. Cloning is cheap.
#[derive(Debug, Clone)]
pub struct SequenceHandle {
    name: String,
    alphabet: u8,
    gen: Arc<Generator>,
}

impl SequenceHandle {
    pub fn catalog(entry: Catalog) -> Self {
        let automaton = entry.automaton();
        Self {
            name: entry.to_string(),
            alphabet: entry.alphabet_size(),
            gen: Arc::new(Generator::Catalog { entry, automaton }),
        }
    }

    /// `name` or `name:key=value,...`, see [`Catalog::parse`].
    pub fn parse(spec: &str) -> Result<Self> {
        Ok(Self::catalog(Catalog::parse(spec)?))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of output symbols (symbols are `0..alphabet`).
    pub fn alphabet(&self) -> u8 {
        self.alphabet
    }

    pub fn catalog_entry(&self) -> Option<&Catalog> {
        match &*self.gen {
            Generator::Catalog { entry, .. } => Some(entry),
            Generator::Transform { .. } => None,
        }
    }

    pub fn automaton(&self) -> Option<&AutomatonSpec> {
        match &*self.gen {
            Generator::Catalog { automaton, .. } => automaton.as_ref(),
            Generator::Transform { .. } => None,
        }
    }

    pub fn transform(&self, map: IndexMap) -> Self {
        Self {
            name: format!("{}|{}", self.name, map),
            alphabet: self.alphabet,
            gen: Arc::new(Generator::Transform {
                base: self.clone(),
                map,
            }),
        }
    }

    pub fn along_polynomial(&self, coeffs: Vec<i64>) -> Self {
        self.transform(IndexMap::Polynomial(coeffs))
    }

    pub fn along_primes(&self) -> Self {
        self.transform(IndexMap::Primes(Arc::new(PrimeCache::new())))
    }

    pub fn along_floor_power(&self, c: &str) -> Result<Self> {
        Ok(self.transform(IndexMap::FloorPower(FloorPower::parse(c)?)))
    }

    pub fn along_geometric(&self, g: u64) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidParameter(format!(
                "geometric ratio {g} must be at least 2"
            )));
        }
        Ok(self.transform(IndexMap::Geometric(g)))
    }

    /// Applies a transform given in text form: `poly:a0,a1,...`, `primes`,
    /// `floor:c` or `geom:g`.
    pub fn apply_transform(&self, text: &str) -> Result<Self> {
        let (kind, arg) = text.split_once(':').unwrap_or((text, ""));
        match kind {
            "poly" => {
                let coeffs = arg
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(self.along_polynomial(coeffs))
            }
            "primes" if arg.is_empty() => Ok(self.along_primes()),
            "floor" => self.along_floor_power(arg),
            "geom" => {
                let g = arg
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad ratio `{arg}`")))?;
                self.along_geometric(g)
            }
            _ => Err(Error::Parse(format!("unknown transform `{text}`"))),
        }
    }

    pub fn value(&self, n: u64) -> Result<u8> {
        self.value_at(&Index::Small(n as u128))
    }

    pub fn value_at(&self, idx: &Index) -> Result<u8> {
        match &*self.gen {
            Generator::Catalog { entry, automaton } => Ok(match (automaton, idx) {
                (Some(a), Index::Small(n)) => a.eval(*n),
                (Some(a), Index::Big(n)) => a.eval_big(n),
                (None, Index::Small(n)) => entry.recurrence(*n),
                (None, Index::Big(n)) => match entry {
                    Catalog::ZeckendorfSum => zeckendorf_big(n).sum_mod2(),
                    Catalog::ZeckendorfGap => zeckendorf_big(n).gap2_mod2(),
                    _ => unreachable!("only Zeckendorf entries lack an automaton"),
                },
            }),
            Generator::Transform { base, map } => {
                let n = match idx {
                    Index::Small(n) => u64::try_from(*n).ok(),
                    Index::Big(_) => None,
                }
                .ok_or_else(|| {
                    Error::InvalidParameter("subsequence position exceeds 64 bits".into())
                })?;
                base.value_at(&map.index(n)?)
            }
        }
    }

    /// The first `count` symbols. Prefix-stable and independent of thread count.
    pub fn prefix(&self, count: usize) -> Result<Vec<u8>> {
        // the sieve grows once up front rather than from many threads at once
        if let Generator::Transform {
            map: IndexMap::Primes(cache),
            ..
        } = &*self.gen
        {
            if count > 0 {
                cache.nth(count - 1);
            }
        }
        if count < 4096 {
            return (0..count as u64).map(|n| self.value(n)).collect();
        }
        (0..count as u64)
            .into_par_iter()
            .map(|n| self.value(n))
            .collect()
    }

    /// Compares automaton and recurrence for all `n < limit`; `Ok(None)` when they agree,
    /// otherwise the first index where they differ.
    pub fn first_disagreement(&self, limit: u64) -> Result<Option<u64>> {
        match &*self.gen {
            Generator::Catalog {
                entry,
                automaton: Some(a),
            } => Ok((0..limit).find(|&n| a.eval(n as u128) != entry.recurrence(n as u128))),
            _ => Err(Error::InvalidParameter(format!(
                "{} does not carry both an automaton and a recurrence",
                self.name
            ))),
        }
    }

    pub fn cross_check(&self, limit: u64) -> Result<bool> {
        Ok(self.first_disagreement(limit)?.is_none())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::catalog::automatic_entries;

    fn tm() -> SequenceHandle {
        SequenceHandle::catalog(Catalog::ThueMorse)
    }

    #[test]
    fn along_squares() {
        let sq = tm().along_polynomial(vec![0, 0, 1]);
        assert_eq!(sq.prefix(6).unwrap(), vec![0, 1, 1, 0, 1, 1]);
        assert_eq!(sq.name(), "thue-morse|poly:0,0,1");
    }

    #[test]
    fn identity_polynomial() {
        let id = tm().along_polynomial(vec![0, 1]);
        assert_eq!(id.prefix(500).unwrap(), tm().prefix(500).unwrap());
    }

    #[test]
    fn negative_index_is_a_domain_error() {
        let neg = tm().along_polynomial(vec![0, -1]);
        assert_eq!(neg.value(0).unwrap(), 0);
        assert!(matches!(
            neg.value(1),
            Err(Error::NegativeIndex { n: 1, .. })
        ));
    }

    #[test]
    fn polynomial_beyond_i128() {
        // n^5 at n = 2^40 needs 200 bits
        let h = tm().along_polynomial(vec![0, 0, 0, 0, 0, 1]);
        let n = 1u64 << 40;
        assert_eq!(h.value(n).unwrap(), 1); // 2^200 has one set bit
        let h = tm().along_polynomial(vec![1, 0, 0, 0, 0, 1]);
        assert_eq!(h.value(n).unwrap(), 0); // 2^200 + 1
    }

    #[test]
    fn along_primes_prefix() {
        let p = tm().along_primes();
        assert_eq!(p.prefix(4).unwrap(), vec![1, 0, 0, 1]);
        let a = p.prefix(10).unwrap();
        let b = p.prefix(20_000).unwrap();
        assert_eq!(&b[..10], &a[..]);
        let ids = SequenceHandle::catalog(Catalog::Zero).along_primes();
        assert!(matches!(&*ids.gen, Generator::Transform { .. }));
        if let Generator::Transform { map, .. } = &*ids.gen {
            assert_eq!(map.index(0).unwrap(), Index::Small(2));
        }
    }

    #[test]
    fn along_floor_power_indices() {
        let fp = IndexMap::FloorPower(FloorPower::parse("1.5").unwrap());
        assert_eq!(fp.index(2).unwrap(), Index::Small(2));
        assert_eq!(fp.index(4).unwrap(), Index::Small(8));
        assert_eq!(fp.index(10).unwrap(), Index::Small(31));
        assert!(tm().along_floor_power("2.5").is_err());
    }

    #[test]
    fn along_geometric_prefix() {
        let g = IndexMap::Geometric(3);
        let idx: Vec<Index> = (0..4).map(|n| g.index(n).unwrap()).collect();
        assert_eq!(
            idx,
            vec![
                Index::Small(1),
                Index::Small(3),
                Index::Small(9),
                Index::Small(27)
            ]
        );
        // t_1, t_3, t_9, t_27: 27 = 0b11011 has four ones
        assert_eq!(
            tm().along_geometric(3).unwrap().prefix(4).unwrap(),
            vec![1, 0, 0, 0]
        );
        // t_{2^n} = t_1 = 1
        let two = tm().along_geometric(2).unwrap().prefix(300).unwrap();
        assert!(two.iter().all(|&v| v == 1));
        assert!(tm().along_geometric(1).is_err());
        // 3^200 goes through the big-integer path
        let big = tm().along_geometric(3).unwrap().value(200).unwrap();
        let expect = BigUint::from(3u8)
            .pow(200)
            .to_radix_le(2)
            .iter()
            .map(|&b| b as u32)
            .sum::<u32>()
            % 2;
        assert_eq!(big as u32, expect);
    }

    #[test]
    fn transform_text_forms() {
        let h = tm().apply_transform("poly:0,0,1").unwrap();
        assert_eq!(h.prefix(6).unwrap(), vec![0, 1, 1, 0, 1, 1]);
        assert!(tm().apply_transform("primes").is_ok());
        assert!(tm().apply_transform("floor:1.5").is_ok());
        assert!(tm().apply_transform("geom:3").is_ok());
        assert!(tm().apply_transform("poly:a").is_err());
        assert!(tm().apply_transform("sideways").is_err());
    }

    #[test]
    fn cross_check_all_automatic_entries() {
        for entry in automatic_entries() {
            let h = SequenceHandle::catalog(entry);
            assert_eq!(h.first_disagreement(1 << 16).unwrap(), None, "{}", h.name());
        }
        assert!(SequenceHandle::catalog(Catalog::ZeckendorfSum)
            .cross_check(10)
            .is_err());
    }

    #[test]
    fn thue_morse_recurrence_identities() {
        let t = tm().prefix(1 << 16).unwrap();
        for n in 0..(1 << 15) {
            assert_eq!(t[2 * n], t[n]);
            assert_eq!(t[2 * n + 1], 1 - t[n]);
        }
    }

    #[test]
    fn zeckendorf_value() {
        let z = SequenceHandle::catalog(Catalog::ZeckendorfSum);
        assert_eq!(z.value(11).unwrap(), 0);
        let big = Index::Big(BigUint::from(u128::MAX) + 5u8);
        assert!(z.value_at(&big).is_ok());
    }

    #[test]
    fn handles_are_shareable() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<SequenceHandle>();
        let h = tm().along_primes();
        let serial: Vec<u8> = (0..5000).map(|n| h.value(n).unwrap()).collect();
        let threads: Vec<_> = (0..4)
            .map(|_| {
                let h = h.clone();
                std::thread::spawn(move || h.prefix(5000).unwrap())
            })
            .collect();
        for t in threads {
            assert_eq!(t.join().unwrap(), serial);
        }
    }
}
