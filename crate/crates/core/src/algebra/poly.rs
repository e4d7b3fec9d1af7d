//! Univariate polynomials over a prime field, irreducibility testing and
//! enumeration of monic irreducibles.

use std::fmt;

use super::fp::Fp;
use crate::error::{Error, Result};

/// Polynomial over F_p, constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    coeffs: Vec<u32>,
}

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl FpPoly {
    pub fn new(f: &Fp, coeffs: Vec<u32>) -> Self {
        let mut c: Vec<u32> = coeffs.into_iter().map(|a| a % f.p()).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { coeffs: c }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self { coeffs: vec![0, 1] }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn eval(&self, f: &Fp, x: u32) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    pub fn add(&self, f: &Fp, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        FpPoly { coeffs: c }.trim()
    }

    pub fn sub(&self, f: &Fp, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        FpPoly { coeffs: c }.trim()
    }

    pub fn mul(&self, f: &Fp, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero();
        }
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % f.p() as u64;
            }
        }
        FpPoly {
            coeffs: acc.into_iter().map(|v| v as u32).collect(),
        }
        .trim()
    }

    /// Quotient and remainder; panics if `divisor` is zero.
    pub fn div_rem(&self, f: &Fp, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        let dd = divisor
            .degree()
            .finite()
            .expect("division by zero polynomial");
        let inv = f.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (FpPoly::zero(), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(rem[i], inv);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        (
            FpPoly { coeffs: quot }.trim(),
            FpPoly { coeffs: rem }.trim(),
        )
    }

    pub fn rem(&self, f: &Fp, m: &FpPoly) -> FpPoly {
        self.div_rem(f, m).1
    }

    pub fn monic(&self, f: &Fp) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = f.inv(self.leading());
        FpPoly {
            coeffs: self.coeffs.iter().map(|&c| f.mul(c, inv)).collect(),
        }
    }

    pub fn gcd(&self, f: &Fp, other: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn mul_mod(&self, f: &Fp, other: &FpPoly, m: &FpPoly) -> FpPoly {
        self.mul(f, other).rem(f, m)
    }

    pub fn pow_mod(&self, f: &Fp, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(f, m);
        let mut acc = FpPoly::one().rem(f, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(f, &base, m);
            }
            base = base.mul_mod(f, &base, m);
            e >>= 1;
        }
        acc
    }

    /// Parses `c0,c1,...` (constant term first).
    pub fn parse(f: &Fp, text: &str) -> Result<Self> {
        let coeffs = parse_coeff_list(text)?
            .into_iter()
            .map(|c| f.from_i64(c))
            .collect();
        Ok(FpPoly::new(f, coeffs))
    }

    /// Text form `c0,c1,...`; the zero polynomial prints as `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub(crate) fn parse_coeff_list(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad coefficient `{}`", s.trim())))
        })
        .collect()
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Irreducibility over F_p: `gcd(f, x^{p^i} - x mod f) = 1` for all `i <= deg f / 2`.
pub fn is_irreducible(field: &Fp, f: &FpPoly) -> Result<bool> {
    let d = match f.degree() {
        Degree::Finite(d) if d >= 1 => d,
        _ => return Err(Error::ConstantPolynomial),
    };
    if d == 1 {
        return Ok(true);
    }
    let x = FpPoly::x();
    let mut frob = x.clone(); // x^{p^i} mod f
    for _ in 1..=d / 2 {
        frob = frob.pow_mod(field, field.p() as u64, f);
        let g = frob.sub(field, &x).gcd(field, f);
        if g.degree() != Degree::Finite(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Default cap on `p^r` for exhaustive enumerations.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 24;

/// All monic irreducible polynomials of degree `r` over F_p in lexicographic
/// order of the coefficient vector `(c0, ..., c_{r-1})` read from the top.
pub fn enumerate_monic_irreducibles(field: &Fp, r: usize, cap: u128) -> Result<Vec<FpPoly>> {
    if r == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let p = field.p() as u128;
    let size = p.checked_pow(r as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let mut out = Vec::new();
    let mut lower = vec![0u32; r];
    for _ in 0..size {
        let mut coeffs = lower.clone();
        coeffs.push(1);
        let f = FpPoly { coeffs };
        if is_irreducible(field, &f)? {
            out.push(f);
        }
        // next tuple, most significant position = coefficient of x^{r-1}
        for c in lower.iter_mut() {
            *c += 1;
            if *c < field.p() {
                break;
            }
            *c = 0;
        }
    }
    out.sort_by(|a, b| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()));
    Ok(out)
}

/// The lexicographically least monic irreducible of degree `r`.
pub fn least_irreducible(field: &Fp, r: usize) -> Result<FpPoly> {
    // walk in lexicographic order and stop at the first hit
    let p = field.p();
    let mut lower = vec![0u32; r];
    loop {
        let mut coeffs = lower.clone();
        coeffs.push(1);
        let f = FpPoly { coeffs };
        if is_irreducible(field, &f)? {
            return Ok(f);
        }
        // increment with the x^{r-1} coefficient most significant
        let mut i = 0;
        loop {
            if i == r {
                unreachable!("irreducible polynomials of every degree exist");
            }
            lower[i] += 1;
            if lower[i] < p {
                break;
            }
            lower[i] = 0;
            i += 1;
        }
    }
}

/// Number of monic irreducibles of degree r: `(1/r) sum_{e | r} mu(e) p^{r/e}`.
pub fn necklace_count(p: u64, r: u32) -> u64 {
    let mut total: i128 = 0;
    for e in 1..=r {
        if r.is_multiple_of(e) {
            total += mobius(e) as i128 * (p as i128).pow(r / e);
        }
    }
    (total / r as i128) as u64
}

fn mobius(n: u32) -> i32 {
    let mut m = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn small_irreducibility() {
        let f = f2();
        assert!(is_irreducible(&f, &FpPoly::new(&f, vec![1, 1, 1])).unwrap());
        assert!(!is_irreducible(&f, &FpPoly::new(&f, vec![1, 0, 1])).unwrap());
        assert!(is_irreducible(&f, &FpPoly::new(&f, vec![1, 1])).unwrap());
        assert_eq!(
            is_irreducible(&f, &FpPoly::new(&f, vec![1])),
            Err(Error::ConstantPolynomial)
        );
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2
        assert!(!is_irreducible(&f, &FpPoly::new(&f, vec![1, 0, 1, 0, 1])).unwrap());
    }

    /// Irreducible iff no factorization into two monic factors of positive degree.
    fn irreducible_by_products(field: &Fp, r: usize) -> Vec<FpPoly> {
        let p = field.p();
        let monics = |deg: usize| -> Vec<FpPoly> {
            let mut out = Vec::new();
            for idx in 0..(p as u64).pow(deg as u32) {
                let mut c: Vec<u32> = (0..deg)
                    .map(|i| ((idx / (p as u64).pow(i as u32)) % p as u64) as u32)
                    .collect();
                c.push(1);
                out.push(FpPoly::new(field, c));
            }
            out
        };
        let mut reducible = std::collections::HashSet::new();
        for d in 1..r {
            for a in monics(d) {
                for b in monics(r - d) {
                    reducible.insert(a.mul(field, &b));
                }
            }
        }
        let mut out: Vec<FpPoly> = monics(r)
            .into_iter()
            .filter(|f| !reducible.contains(f))
            .collect();
        out.sort_by(|a, b| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()));
        out
    }

    #[test]
    fn enumeration_matches_factorization_oracle() {
        for (p, r) in [
            (2u32, 2usize),
            (2, 3),
            (2, 4),
            (3, 2),
            (3, 3),
            (5, 2),
            (7, 2),
        ] {
            let field = Fp::new(p).unwrap();
            let got = enumerate_monic_irreducibles(&field, r, DEFAULT_ENUMERATION_CAP).unwrap();
            assert_eq!(got, irreducible_by_products(&field, r), "p={p} r={r}");
        }
        let f = f2();
        assert_eq!(
            enumerate_monic_irreducibles(&f, 2, 1 << 10).unwrap(),
            vec![FpPoly::new(&f, vec![1, 1, 1])]
        );
        assert_eq!(
            enumerate_monic_irreducibles(&Fp::new(3).unwrap(), 2, 1 << 10)
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn counts_match_necklace_formula() {
        for p in [2u32, 3, 5, 7] {
            let field = Fp::new(p).unwrap();
            for r in 1..=4usize {
                let n = enumerate_monic_irreducibles(&field, r, DEFAULT_ENUMERATION_CAP)
                    .unwrap()
                    .len();
                assert_eq!(n as u64, necklace_count(p as u64, r as u32), "p={p} r={r}");
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let field = Fp::new(7).unwrap();
        assert!(matches!(
            enumerate_monic_irreducibles(&field, 4, 100),
            Err(Error::CapExceeded {
                size: 2401,
                cap: 100
            })
        ));
    }

    #[test]
    fn least_irreducible_is_first_enumerated() {
        for p in [2u32, 3, 5] {
            let field = Fp::new(p).unwrap();
            for r in 1..=4 {
                let all = enumerate_monic_irreducibles(&field, r, DEFAULT_ENUMERATION_CAP).unwrap();
                assert_eq!(least_irreducible(&field, r).unwrap(), all[0]);
            }
        }
    }

    #[test]
    fn division_identity() {
        let f = Fp::new(5).unwrap();
        let a = FpPoly::new(&f, vec![3, 1, 4, 1, 2, 0, 3]);
        let b = FpPoly::new(&f, vec![2, 0, 1, 4]);
        let (q, r) = a.div_rem(&f, &b);
        assert_eq!(q.mul(&f, &b).add(&f, &r), a);
        assert!(r.degree() < b.degree());
        assert_eq!(FpPoly::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn text_format() {
        let f = Fp::new(5).unwrap();
        let a = FpPoly::parse(&f, "1, -1, 0, 2").unwrap();
        assert_eq!(a.coeffs(), &[1, 4, 0, 2]);
        assert_eq!(a.to_text(), "1,4,0,2");
        assert_eq!(a.to_string(), "2x^3 + 4x + 1");
        assert!(FpPoly::parse(&f, "1,,2").is_err());
    }
}
