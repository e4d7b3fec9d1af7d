//! Exact `floor(n^c)` for a decimal exponent `1 < c < 2`.
//!
//! `c = num/den` is kept as an exact rational. A double-precision estimate
//! is accepted only when it lies clearly inside an integer interval;
//! otherwise the floor is settled with exact integer arithmetic:
//! `m = floor(n^c)` iff `m^den <= n^num < (m+1)^den`.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct FloorPower {
    text: String,
    num: u64,
    den: u64,
    approx: f64,
}

/// Relative slack allowed around the f64 estimate before falling back to exact arithmetic.
const MARGIN: f64 = 1e-12;

impl FloorPower {
    pub fn parse(c: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("exponent `{c}` must be a decimal in (1, 2)"));
        let (int, frac) = c.trim().split_once('.').unwrap_or((c.trim(), ""));
        if int.is_empty()
            || !int.chars().all(|ch| ch.is_ascii_digit())
            || !frac.chars().all(|ch| ch.is_ascii_digit())
        {
            return Err(bad());
        }
        if frac.len() > 12 {
            return Err(Error::InvalidParameter(format!(
                "exponent `{c}` has more than 12 decimals"
            )));
        }
        let den = 10u64.pow(frac.len() as u32);
        let int: u64 = int.parse().map_err(|_| bad())?;
        let frac_val: u64 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        let num = int
            .checked_mul(den)
            .and_then(|v| v.checked_add(frac_val))
            .ok_or_else(bad)?;
        if num <= den || num >= 2 * den {
            return Err(bad());
        }
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        Ok(Self {
            text: c.trim().to_string(),
            num,
            den,
            approx: num as f64 / den as f64,
        })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn ratio(&self) -> (u64, u64) {
        (self.num, self.den)
    }

    pub fn floor(&self, n: u64) -> BigUint {
        if n <= 1 {
            return BigUint::from(n);
        }
        let y = (self.approx * (n as f64).ln()).exp();
        if y < 1e15 {
            let m = y.floor();
            let gap = (y - m).min(m + 1.0 - y);
            if gap > MARGIN * y + 1e-6 {
                return BigUint::from(m as u64);
            }
            // near an integer: settle exactly, starting from the estimate
            return self.exact_near(n, y.round() as u64);
        }
        self.exact(n)
    }

    fn target(&self, n: u64) -> BigUint {
        BigUint::from(n).pow(self.num as u32)
    }

    fn exact_near(&self, n: u64, guess: u64) -> BigUint {
        let target = self.target(n);
        let e = self.den as u32;
        let mut m = BigUint::from(guess);
        while m.pow(e) > target {
            m -= 1u8;
        }
        while (&m + 1u8).pow(e) <= target {
            m += 1u8;
        }
        m
    }

    fn exact(&self, n: u64) -> BigUint {
        let m = self.target(n).nth_root(self.den as u32);
        debug_assert!(m.pow(self.den as u32) <= self.target(n));
        m
    }

    /// Reference path that never uses floating point.
    pub fn floor_exact(&self, n: u64) -> BigUint {
        if n <= 1 {
            return BigUint::from(n);
        }
        self.exact(n)
    }
}

impl std::fmt::Display for FloorPower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = FloorPower::parse("1.5").unwrap();
        assert_eq!(c.ratio(), (3, 2));
        assert_eq!(c.floor(2), BigUint::from(2u8));
        assert_eq!(c.floor(4), BigUint::from(8u8));
        assert_eq!(c.floor(10), BigUint::from(31u8));
        assert_eq!(c.floor(9), BigUint::from(27u8));
    }

    #[test]
    fn range_checked() {
        assert!(FloorPower::parse("1").is_err());
        assert!(FloorPower::parse("2.0").is_err());
        assert!(FloorPower::parse("0.5").is_err());
        assert!(FloorPower::parse("abc").is_err());
        assert!(FloorPower::parse("1.").is_err());
        assert!(FloorPower::parse("1.000").is_err());
        assert!(FloorPower::parse("1.999").is_ok());
    }

    #[test]
    fn fast_path_matches_exact() {
        for c in ["1.5", "1.25", "1.37", "1.9", "1.01"] {
            let fp = FloorPower::parse(c).unwrap();
            for n in (0..3000u64).chain([1 << 20, 999_983, 1_000_000]) {
                assert_eq!(fp.floor(n), fp.floor_exact(n), "c={c} n={n}");
            }
        }
    }

    #[test]
    fn perfect_powers_resolve_exactly() {
        let fp = FloorPower::parse("1.5").unwrap();
        for m in 1..2000u64 {
            let n = m * m;
            assert_eq!(fp.floor(n), BigUint::from(m * m * m));
            assert!(fp.floor(n - 1) < BigUint::from(m * m * m));
            assert_eq!(fp.floor(n - 1), fp.floor_exact(n - 1));
        }
        let fp = FloorPower::parse("1.25").unwrap();
        for m in 1..60u64 {
            let n = m.pow(4);
            assert_eq!(fp.floor(n), BigUint::from(m.pow(5)));
        }
    }
}
