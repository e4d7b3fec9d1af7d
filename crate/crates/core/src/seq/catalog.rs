//! The named sequences: each automatic entry carries a DFAO and an
//! independent recurrence evaluator so the two can be cross-checked.

use std::collections::HashMap;
use std::fmt;

use super::automaton::{AutomatonSpec, Reading};
use super::digits::zeckendorf;
use crate::error::{Error, Result};

/// A catalog entry together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Catalog {
    ThueMorse,
    RudinShapiro,
    /// Occurrences mod `base` of `pattern` (most significant digit first) in base-`base` digits.
    Pattern {
        base: u32,
        pattern: Vec<u32>,
    },
    RudinShapiroLike,
    BaumSweet,
    ThreeSquares,
    PaperFolding {
        v0: u8,
    },
    Apwenian,
    ZeckendorfSum,
    ZeckendorfGap,
    Zero,
}

/// The eight automatic sequences that carry both definitions and an annihilator.
pub fn automatic_entries() -> Vec<Catalog> {
    vec![
        Catalog::ThueMorse,
        Catalog::RudinShapiro,
        Catalog::Pattern {
            base: 2,
            pattern: vec![1, 1, 1],
        },
        Catalog::RudinShapiroLike,
        Catalog::BaumSweet,
        Catalog::ThreeSquares,
        Catalog::PaperFolding { v0: 0 },
        Catalog::Apwenian,
    ]
}

impl Catalog {
    /// Parses `name` or `name:key=value,key=value`.
    pub fn parse(spec: &str) -> Result<Self> {
        let (name, params) = match spec.split_once(':') {
            Some((n, p)) => (n, p),
            None => (spec, ""),
        };
        let mut kv = HashMap::new();
        for item in params.split(',').filter(|s| !s.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| {
                Error::InvalidParameter(format!("expected key=value, got `{item}`"))
            })?;
            kv.insert(k.trim().to_string(), v.trim().to_string());
        }
        let take = |kv: &mut HashMap<String, String>, key: &str| kv.remove(key);
        let entry = match name {
            "thue-morse" => Catalog::ThueMorse,
            "rudin-shapiro" => Catalog::RudinShapiro,
            "rudin-shapiro-like" => Catalog::RudinShapiroLike,
            "baum-sweet" => Catalog::BaumSweet,
            "three-squares" => Catalog::ThreeSquares,
            "apwenian" => Catalog::Apwenian,
            "zeckendorf-sum" => Catalog::ZeckendorfSum,
            "zeckendorf-gap" => Catalog::ZeckendorfGap,
            "zero" => Catalog::Zero,
            "paper-folding" => {
                let v0 = take(&mut kv, "v0").ok_or_else(|| {
                    Error::InvalidParameter("paper-folding requires v0=0 or v0=1".into())
                })?;
                let v0 = match v0.as_str() {
                    "0" => 0,
                    "1" => 1,
                    other => {
                        return Err(Error::InvalidParameter(format!(
                            "v0 must be 0 or 1, got {other}"
                        )))
                    }
                };
                Catalog::PaperFolding { v0 }
            }
            "pattern" => {
                let base = match take(&mut kv, "k") {
                    Some(k) => k
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidParameter(format!("bad base `{k}`")))?,
                    None => 2,
                };
                let p = take(&mut kv, "p")
                    .ok_or_else(|| Error::InvalidParameter("pattern requires p=<digits>".into()))?;
                let pattern = p
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .ok_or_else(|| Error::InvalidParameter(format!("bad digit `{c}`")))
                    })
                    .collect::<Result<Vec<u32>>>()?;
                Catalog::pattern(base, pattern)?
            }
            other => return Err(Error::UnknownSequence(other.to_string())),
        };
        if let Some(k) = kv.keys().next() {
            return Err(Error::InvalidParameter(format!(
                "unknown parameter `{k}` for {name}"
            )));
        }
        Ok(entry)
    }

    pub fn pattern(base: u32, pattern: Vec<u32>) -> Result<Self> {
        if !(2..=10).contains(&base) {
            return Err(Error::InvalidBase(base as u64));
        }
        if pattern.is_empty() || pattern.iter().all(|&d| d == 0) {
            return Err(Error::InvalidParameter(
                "pattern must contain a nonzero digit".into(),
            ));
        }
        if pattern.len() > 12 {
            return Err(Error::InvalidParameter(
                "pattern longer than 12 digits".into(),
            ));
        }
        if let Some(&d) = pattern.iter().find(|&&d| d >= base) {
            return Err(Error::InvalidParameter(format!(
                "digit {d} out of range for base {base}"
            )));
        }
        Ok(Catalog::Pattern { base, pattern })
    }

    pub fn alphabet_size(&self) -> u8 {
        match self {
            Catalog::Pattern { base, .. } => *base as u8,
            Catalog::Zero => 1,
            _ => 2,
        }
    }

    /// The integer a(P) whose base-k expansion is the pattern.
    pub fn pattern_value(base: u32, pattern: &[u32]) -> u64 {
        pattern
            .iter()
            .fold(0u64, |acc, &d| acc * base as u64 + d as u64)
    }

    /// DFAO for the entry; `None` for the Zeckendorf sequences, which are not base-k automatic.
    pub fn automaton(&self) -> Option<AutomatonSpec> {
        use Reading::*;
        let a = match self {
            Catalog::ThueMorse => AutomatonSpec::from_table(
                2,
                &[("A", &["A", "B"], 0), ("B", &["B", "A"], 1)],
                Reverse,
            ),
            // The drawn 0-loop at D points at B; the recurrence requires D -0-> D.
            Catalog::RudinShapiro => AutomatonSpec::from_table(
                2,
                &[
                    ("A", &["A", "B"], 0),
                    ("B", &["A", "C"], 0),
                    ("C", &["D", "B"], 1),
                    ("D", &["D", "C"], 1),
                ],
                Reverse,
            ),
            // Same repair as Rudin-Shapiro: D -0-> D.
            Catalog::RudinShapiroLike => AutomatonSpec::from_table(
                2,
                &[
                    ("A", &["A", "B"], 0),
                    ("B", &["C", "A"], 0),
                    ("C", &["B", "D"], 1),
                    ("D", &["D", "C"], 1),
                ],
                Direct,
            ),
            Catalog::BaumSweet => AutomatonSpec::from_table(
                2,
                &[
                    ("A", &["B", "A"], 1),
                    ("B", &["A", "C"], 1),
                    ("C", &["C", "C"], 0),
                ],
                Reverse,
            ),
            Catalog::ThreeSquares => AutomatonSpec::from_table(
                2,
                &[
                    ("A", &["C", "B"], 1),
                    ("B", &["D", "E"], 1),
                    ("C", &["A", "D"], 1),
                    ("D", &["D", "D"], 1),
                    ("E", &["D", "F"], 1),
                    ("F", &["F", "F"], 0),
                ],
                Reverse,
            ),
            Catalog::PaperFolding { v0 } => AutomatonSpec::from_table(
                2,
                &[
                    ("A", &["A", "B"], *v0),
                    ("B", &["D", "C"], 1),
                    ("C", &["C", "C"], 0),
                    ("D", &["D", "D"], 1),
                ],
                Reverse,
            ),
            Catalog::Apwenian => AutomatonSpec::from_table(
                2,
                &[
                    ("A", &["B", "C"], 1),
                    ("B", &["B", "B"], 1),
                    ("C", &["D", "A"], 0),
                    ("D", &["D", "D"], 0),
                ],
                Reverse,
            ),
            Catalog::Pattern { base, pattern } => Ok(pattern_automaton(*base, pattern)),
            Catalog::Zero => AutomatonSpec::from_table(2, &[("A", &["A", "A"], 0)], Reverse),
            Catalog::ZeckendorfSum | Catalog::ZeckendorfGap => return None,
        };
        Some(a.expect("catalog automata are well formed"))
    }

    /// Evaluates the defining recurrence (or closed-form rule) at `n`,
    /// independently of the automaton.
    pub fn recurrence(&self, n: u128) -> u8 {
        match self {
            Catalog::ThueMorse => thue_morse_rec(n),
            Catalog::RudinShapiro => {
                // r_n = r_{n/2} + [n = 3 mod 4]
                let mut m = n;
                let mut r = 0u8;
                while m > 0 {
                    if m % 4 == 3 {
                        r ^= 1;
                    }
                    m /= 2;
                }
                r
            }
            Catalog::Pattern { base, pattern } => {
                let k = *base as u128;
                let modulus = k.pow(pattern.len() as u32);
                let a = Catalog::pattern_value(*base, pattern) as u128;
                let mut m = n;
                let mut count = 0u128;
                while m > 0 {
                    if m % modulus == a {
                        count += 1;
                    }
                    m /= k;
                }
                (count % k) as u8
            }
            Catalog::RudinShapiroLike => {
                // l_{2n+1} = l_n, l_{2n} = l_n + t_n
                let mut m = n;
                let mut l = 0u8;
                while m > 0 {
                    if m.is_multiple_of(2) {
                        l ^= thue_morse_rec(m / 2);
                    }
                    m /= 2;
                }
                l
            }
            Catalog::BaumSweet => {
                let mut m = n;
                loop {
                    if m == 0 {
                        return 1;
                    }
                    while m.is_multiple_of(4) {
                        m /= 4;
                    }
                    if m.is_multiple_of(2) {
                        return 0;
                    }
                    m = (m - 1) / 2;
                }
            }
            Catalog::ThreeSquares => {
                if n == 0 {
                    return 1;
                }
                let mut m = n;
                while m.is_multiple_of(4) {
                    m /= 4;
                }
                u8::from(m % 8 != 7)
            }
            Catalog::PaperFolding { v0 } => {
                if n == 0 {
                    return *v0;
                }
                let m = n >> n.trailing_zeros();
                u8::from(m % 4 == 1)
            }
            Catalog::Apwenian => {
                // w_{2n} = 1, w_{2n+1} = w_n + 1
                let mut m = n;
                let mut flips = 0u8;
                while m % 2 == 1 {
                    flips ^= 1;
                    m /= 2;
                }
                1 ^ flips
            }
            Catalog::ZeckendorfSum => zeckendorf(n).sum_mod2(),
            Catalog::ZeckendorfGap => zeckendorf(n).gap2_mod2(),
            Catalog::Zero => 0,
        }
    }
}

impl fmt::Display for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Catalog::ThueMorse => write!(f, "thue-morse"),
            Catalog::RudinShapiro => write!(f, "rudin-shapiro"),
            Catalog::Pattern { base, pattern } => {
                write!(f, "pattern:k={base},p=")?;
                pattern.iter().try_for_each(|d| write!(f, "{d}"))
            }
            Catalog::RudinShapiroLike => write!(f, "rudin-shapiro-like"),
            Catalog::BaumSweet => write!(f, "baum-sweet"),
            Catalog::ThreeSquares => write!(f, "three-squares"),
            Catalog::PaperFolding { v0 } => write!(f, "paper-folding:v0={v0}"),
            Catalog::Apwenian => write!(f, "apwenian"),
            Catalog::ZeckendorfSum => write!(f, "zeckendorf-sum"),
            Catalog::ZeckendorfGap => write!(f, "zeckendorf-gap"),
            Catalog::Zero => write!(f, "zero"),
        }
    }
}

fn thue_morse_rec(n: u128) -> u8 {
    // t_{2n} = t_n, t_{2n+1} = 1 - t_n
    let mut m = n;
    let mut t = 0u8;
    while m > 0 {
        t ^= (m & 1) as u8;
        m >>= 1;
    }
    t
}

/// Reverse-reading DFAO counting pattern occurrences modulo the base.
///
/// A state remembers how many digits were read (capped at `len - 1`), the
/// last `len - 1` digits, and the running count. The output also counts the
/// windows that would complete if only zeros followed, so padding the input
/// with zeros never changes the result.
fn pattern_automaton(base: u32, pattern: &[u32]) -> AutomatonSpec {
    #[derive(Clone, PartialEq, Eq, Hash)]
    struct State {
        buf: Vec<u32>,
        count: u32,
    }
    let len = pattern.len();
    // window digits are stored least significant first
    let target: Vec<u32> = pattern.iter().rev().copied().collect();
    let k = base;

    let output = |s: &State| -> u8 {
        let mut extra = 0;
        for start in 0..s.buf.len() {
            let window = s.buf[start..]
                .iter()
                .copied()
                .chain(std::iter::repeat(0))
                .take(len);
            if window.eq(target.iter().copied()) {
                extra += 1;
            }
        }
        ((s.count + extra) % k) as u8
    };
    let step = |s: &State, d: u32| -> State {
        let mut seq = s.buf.clone();
        seq.push(d);
        let mut count = s.count;
        if seq.len() == len {
            if seq == target {
                count = (count + 1) % k;
            }
            seq.remove(0);
        }
        State { buf: seq, count }
    };

    let start = State {
        buf: Vec::new(),
        count: 0,
    };
    let mut index: HashMap<State, usize> = HashMap::new();
    let mut states = vec![start.clone()];
    index.insert(start, 0);
    let mut transitions: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let s = states[i].clone();
        let mut row = Vec::with_capacity(k as usize);
        for d in 0..k {
            let t = step(&s, d);
            let id = *index.entry(t.clone()).or_insert_with(|| {
                states.push(t);
                states.len() - 1
            });
            row.push(id);
        }
        transitions.push(row);
        i += 1;
    }
    let names = (0..states.len()).map(|i| format!("q{i}")).collect();
    let outputs = states.iter().map(output).collect();
    AutomatonSpec::new(base, names, transitions, 0, outputs, Reading::Reverse)
        .expect("generated automaton is complete")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prefix(c: &Catalog, n: usize) -> Vec<u8> {
        let a = c.automaton().unwrap();
        (0..n as u128).map(|i| a.eval(i)).collect()
    }

    #[test]
    fn printed_prefixes() {
        assert_eq!(
            prefix(&Catalog::ThueMorse, 12),
            [0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1]
        );
        assert_eq!(
            prefix(&Catalog::RudinShapiro, 12),
            [0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1]
        );
        assert_eq!(prefix(&Catalog::BaumSweet, 1), [1]);
    }

    #[test]
    fn rudin_shapiro_at_three() {
        assert_eq!(Catalog::RudinShapiro.automaton().unwrap().eval(3), 1);
    }

    #[test]
    fn small_values_by_hand() {
        // sums of three squares fail at 7, 15, 23, 28
        let c: Vec<u8> = (0..32)
            .map(|n| Catalog::ThreeSquares.recurrence(n))
            .collect();
        for (n, &v) in c.iter().enumerate() {
            assert_eq!(v == 0, [7, 15, 23, 28, 31].contains(&n), "n={n}");
        }
        // Baum-Sweet: 1 1 0 1 1 0 0 1 0 1
        let b: Vec<u8> = (0..10).map(|n| Catalog::BaumSweet.recurrence(n)).collect();
        assert_eq!(b, [1, 1, 0, 1, 1, 0, 0, 1, 0, 1]);
        // paper folding with v0 = 1: 1 1 1 0 1 1 0 0
        let v: Vec<u8> = (0..8)
            .map(|n| Catalog::PaperFolding { v0: 1 }.recurrence(n))
            .collect();
        assert_eq!(v, [1, 1, 1, 0, 1, 1, 0, 0]);
        // apwenian: w_0..w_7 = 1 0 1 1 1 0 1 0 and the apwenian relation
        let w: Vec<u8> = (0..64).map(|n| Catalog::Apwenian.recurrence(n)).collect();
        assert_eq!(&w[..8], &[1, 0, 1, 1, 1, 0, 1, 0]);
        for n in 0..31 {
            assert_eq!(w[2 * n + 2], w[2 * n + 1] ^ w[n]);
        }
    }

    #[test]
    fn rudin_shapiro_like_is_scattered_pair_parity() {
        for n in 0u128..4096 {
            let bits: Vec<u32> = (0..13).map(|i| (n >> i & 1) as u32).collect();
            let mut pairs = 0;
            for i in 0..13 {
                for j in 0..i {
                    if bits[i] == 1 && bits[j] == 0 && (n >> i) > 0 {
                        pairs += 1;
                    }
                }
            }
            assert_eq!(
                Catalog::RudinShapiroLike.recurrence(n),
                (pairs % 2) as u8,
                "n={n}"
            );
        }
    }

    #[test]
    fn pattern_eleven_is_rudin_shapiro() {
        let p = Catalog::pattern(2, vec![1, 1]).unwrap();
        assert_eq!(Catalog::pattern_value(2, &[1, 1]), 3);
        for n in 0..4096u128 {
            assert_eq!(p.recurrence(n), Catalog::RudinShapiro.recurrence(n));
        }
        let p = Catalog::pattern(2, vec![1]).unwrap();
        for n in 0..4096u128 {
            assert_eq!(p.recurrence(n), Catalog::ThueMorse.recurrence(n));
        }
    }

    #[test]
    fn pattern_automaton_agrees_with_recurrence() {
        for (base, pat) in [
            (2, vec![1, 0]),
            (2, vec![0, 1]),
            (3, vec![1, 2]),
            (3, vec![0, 0, 2]),
            (2, vec![1, 0, 1, 1]),
        ] {
            let c = Catalog::pattern(base, pat.clone()).unwrap();
            let a = c.automaton().unwrap();
            for n in 0..20_000u128 {
                assert_eq!(
                    a.eval(n),
                    c.recurrence(n),
                    "base {base} pattern {pat:?} n={n}"
                );
            }
        }
    }

    #[test]
    fn parse_round_trips() {
        for c in automatic_entries().into_iter().chain([
            Catalog::ZeckendorfSum,
            Catalog::ZeckendorfGap,
            Catalog::Zero,
        ]) {
            assert_eq!(Catalog::parse(&c.to_string()).unwrap(), c);
        }
        assert!(matches!(
            Catalog::parse("nope"),
            Err(Error::UnknownSequence(_))
        ));
        assert!(matches!(
            Catalog::parse("pattern:p=00"),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            Catalog::parse("paper-folding"),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            Catalog::parse("paper-folding:v0=2"),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            Catalog::parse("thue-morse:x=1"),
            Err(Error::InvalidParameter(_))
        ));
    }
}
