//! Power series over F_p truncated at a fixed precision, and bivariate
//! polynomials evaluated at a series.

use super::fp::Fp;
use super::gf2::BitVec;
use super::poly::{Degree, FpPoly};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Coeffs {
    Bits(BitVec),
    Dense(Vec<u32>),
}

/// `s_0 + s_1 x + ... + s_{N-1} x^{N-1}` modulo `x^N`. Over F_2 the
/// coefficients are bit-packed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    fp: Fp,
    coeffs: Coeffs,
}

impl TruncatedSeries {
    pub fn zero(fp: Fp, precision: usize) -> Self {
        let coeffs = if fp.p() == 2 {
            Coeffs::Bits(BitVec::zeros(precision))
        } else {
            Coeffs::Dense(vec![0; precision])
        };
        Self { fp, coeffs }
    }

    pub fn one(fp: Fp, precision: usize) -> Self {
        let mut s = Self::zero(fp, precision);
        if precision > 0 {
            s.set(0, 1);
        }
        s
    }

    /// Coefficients are reduced modulo p.
    pub fn from_coeffs(fp: Fp, coeffs: &[u32]) -> Self {
        let mut s = Self::zero(fp, coeffs.len());
        for (i, &c) in coeffs.iter().enumerate() {
            s.set(i, c % fp.p());
        }
        s
    }

    pub fn from_bits(bits: BitVec) -> Self {
        Self {
            fp: Fp::new(2).expect("2 is prime"),
            coeffs: Coeffs::Bits(bits),
        }
    }

    /// A polynomial read as a series of the given precision.
    pub fn from_poly(fp: Fp, f: &FpPoly, precision: usize) -> Self {
        let mut s = Self::zero(fp, precision);
        for (i, &c) in f.coeffs().iter().enumerate().take(precision) {
            s.set(i, c);
        }
        s
    }

    pub fn field(&self) -> &Fp {
        &self.fp
    }

    pub fn precision(&self) -> usize {
        match &self.coeffs {
            Coeffs::Bits(b) => b.len(),
            Coeffs::Dense(v) => v.len(),
        }
    }

    pub fn bits(&self) -> Option<&BitVec> {
        match &self.coeffs {
            Coeffs::Bits(b) => Some(b),
            Coeffs::Dense(_) => None,
        }
    }

    pub fn coeff(&self, i: usize) -> u32 {
        match &self.coeffs {
            Coeffs::Bits(b) => b.get(i) as u32,
            Coeffs::Dense(v) => v[i],
        }
    }

    fn set(&mut self, i: usize, c: u32) {
        match &mut self.coeffs {
            Coeffs::Bits(b) => b.set(i, c & 1 == 1),
            Coeffs::Dense(v) => v[i] = c,
        }
    }

    pub fn to_vec(&self) -> Vec<u32> {
        (0..self.precision()).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.coeffs {
            Coeffs::Bits(b) => b.is_zero(),
            Coeffs::Dense(v) => v.iter().all(|&c| c == 0),
        }
    }

    /// Index of the first nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        match &self.coeffs {
            Coeffs::Bits(b) => b.first_one(),
            Coeffs::Dense(v) => v.iter().position(|&c| c != 0),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.fp != other.fp || self.precision() != other.precision() {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled_shifted(other, 1, 0);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled_shifted(other, self.fp.neg(1), 0);
        Ok(out)
    }

    /// `self += c * x^shift * other`, truncated.
    pub fn add_scaled_shifted(&mut self, other: &Self, c: u32, shift: usize) {
        let c = c % self.fp.p();
        if c == 0 {
            return;
        }
        match (&mut self.coeffs, &other.coeffs) {
            (Coeffs::Bits(a), Coeffs::Bits(b)) => a.xor_shifted(b, shift),
            (Coeffs::Dense(a), Coeffs::Dense(b)) => {
                let n = a.len();
                for (i, &bc) in b.iter().enumerate().take(n.saturating_sub(shift)) {
                    if bc != 0 {
                        a[i + shift] = self.fp.add(a[i + shift], self.fp.mul(c, bc));
                    }
                }
            }
            _ => unreachable!("series over one field share a representation"),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(match (&self.coeffs, &other.coeffs) {
            (Coeffs::Bits(a), Coeffs::Bits(b)) => Self {
                fp: self.fp,
                coeffs: Coeffs::Bits(a.mul_trunc(b)),
            },
            (Coeffs::Dense(a), _) => {
                let mut out = Self::zero(self.fp, self.precision());
                for (i, &c) in a.iter().enumerate() {
                    out.add_scaled_shifted(other, c, i);
                }
                out
            }
            _ => unreachable!("series over one field share a representation"),
        })
    }

    /// Reduction to a lower precision.
    pub fn truncate(&self, precision: usize) -> Self {
        let coeffs = match &self.coeffs {
            Coeffs::Bits(b) => Coeffs::Bits(b.truncate(precision)),
            Coeffs::Dense(v) => Coeffs::Dense(v[..precision.min(v.len())].to_vec()),
        };
        Self {
            fp: self.fp,
            coeffs,
        }
    }

    /// `G^0, G^1, ..., G^max`, each truncated at the precision of `self`.
    pub fn powers(&self, max: usize) -> Vec<Self> {
        let mut out = vec![Self::one(self.fp, self.precision())];
        for j in 1..=max {
            let next = out[j - 1].mul(self).expect("same context");
            out.push(next);
        }
        out
    }
}

/// The generating function of a symbol prefix over F_p.
pub fn series_from_sequence(prefix: &[u8], fp: Fp) -> Result<TruncatedSeries> {
    if let Some((position, &symbol)) = prefix.iter().enumerate().find(|(_, &s)| s as u32 >= fp.p())
    {
        return Err(Error::SymbolOutOfField {
            symbol,
            position,
            p: fp.p(),
        });
    }
    if fp.p() == 2 {
        return Ok(TruncatedSeries::from_bits(BitVec::from_bits(prefix)));
    }
    let coeffs: Vec<u32> = prefix.iter().map(|&s| s as u32).collect();
    Ok(TruncatedSeries::from_coeffs(fp, &coeffs))
}

/// Sparse `sum c x^i y^j` over F_p with distinct monomials and nonzero
/// coefficients, kept sorted by `(j, i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    fp: Fp,
    terms: Vec<(usize, usize, u32)>,
}

impl BiPoly {
    /// Repeated monomials are summed.
    pub fn new(fp: Fp, terms: impl IntoIterator<Item = (usize, usize, u32)>) -> Self {
        let mut terms: Vec<(usize, usize, u32)> = terms
            .into_iter()
            .map(|(i, j, c)| (i, j, c % fp.p()))
            .collect();
        terms.sort_by_key(|&(i, j, _)| (j, i));
        let mut merged: Vec<(usize, usize, u32)> = Vec::with_capacity(terms.len());
        for (i, j, c) in terms {
            match merged.last_mut() {
                Some(last) if last.0 == i && last.1 == j => last.2 = fp.add(last.2, c),
                _ => merged.push((i, j, c)),
            }
        }
        merged.retain(|t| t.2 != 0);
        Self { fp, terms: merged }
    }

    /// `sum_j h_j(x) y^j` from the coefficient polynomials `h_0, h_1, ...`.
    pub fn from_y_coeffs(fp: Fp, h: &[FpPoly]) -> Self {
        Self::new(
            fp,
            h.iter()
                .enumerate()
                .flat_map(|(j, hj)| hj.coeffs().iter().enumerate().map(move |(i, &c)| (i, j, c))),
        )
    }

    pub fn field(&self) -> &Fp {
        &self.fp
    }

    pub fn terms(&self) -> &[(usize, usize, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .iter()
            .map(|&(i, j, _)| i + j)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn y_degree(&self) -> Degree {
        self.terms
            .iter()
            .map(|&(_, j, _)| j)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// `h_j(x)`, the coefficient of `y^j`.
    pub fn y_coeff(&self, j: usize) -> FpPoly {
        let mut c = Vec::new();
        for &(i, jj, v) in &self.terms {
            if jj == j {
                if c.len() <= i {
                    c.resize(i + 1, 0);
                }
                c[i] = v;
            }
        }
        FpPoly::new(&self.fp, c)
    }

    /// `max_j (deg h_j - j)` over the nonzero `h_j`; `None` for the zero polynomial.
    pub fn shift_degree(&self) -> Option<i64> {
        let d = self.y_degree().finite()?;
        (0..=d)
            .filter_map(|j| {
                self.y_coeff(j)
                    .degree()
                    .finite()
                    .map(|deg| deg as i64 - j as i64)
            })
            .max()
    }

    /// One `i j c` line per monomial.
    pub fn to_text(&self) -> String {
        self.terms
            .iter()
            .map(|(i, j, c)| format!("{i} {j} {c}\n"))
            .collect()
    }

    /// Parses `i j c` lines; blank lines and lines starting with `#` are skipped.
    pub fn parse(fp: Fp, text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(Error::Parse(format!("expected 'i j c', got '{line}'")));
            }
            let i: usize = parts[0]
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent '{}'", parts[0])))?;
            let j: usize = parts[1]
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent '{}'", parts[1])))?;
            let c: i64 = parts[2]
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient '{}'", parts[2])))?;
            terms.push((i, j, fp.from_i64(c)));
        }
        Ok(Self::new(fp, terms))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|&(i, j, c)| {
                let mut s = String::new();
                if c != 1 || (i == 0 && j == 0) {
                    s.push_str(&c.to_string());
                }
                for (v, e) in [("x", i), ("y", j)] {
                    match e {
                        0 => {}
                        1 => s.push_str(v),
                        _ => s.push_str(&format!("{v}^{e}")),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `h(x, G(x)) mod x^N` where N is the precision of `g`.
pub fn bipoly_eval_mod(h: &BiPoly, g: &TruncatedSeries) -> Result<TruncatedSeries> {
    if h.fp != g.fp {
        return Err(Error::ContextMismatch);
    }
    let mut out = TruncatedSeries::zero(g.fp, g.precision());
    let Some(d) = h.y_degree().finite() else {
        return Ok(out);
    };
    let powers = g.powers(d);
    for &(i, j, c) in &h.terms {
        out.add_scaled_shifted(&powers[j], c, i);
    }
    Ok(out)
}
