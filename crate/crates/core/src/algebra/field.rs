//! The extension field F_{p^r} = F_p[x]/(m(x)) with an ordered basis, and
//! univariate polynomials over it.

use super::fp::Fp;
use super::poly::{is_irreducible, least_irreducible, Degree, FpPoly};
use crate::error::{Error, Result};

/// Element of F_{p^r}: coordinates in the polynomial basis `1, a, ..., a^{r-1}`
/// where `a` is a root of the modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElem(Vec<u32>);

impl FieldElem {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    fp: Fp,
    r: usize,
    modulus: FpPoly,
    /// basis element i as polynomial-basis coordinates
    basis: Vec<Vec<u32>>,
    /// maps polynomial-basis coordinates to coordinates in `basis`
    to_basis: Vec<Vec<u32>>,
}

impl FieldCtx {
    /// F_{p^r} with the lexicographically least monic irreducible modulus and
    /// the polynomial basis.
    pub fn new(p: u32, r: usize) -> Result<Self> {
        let fp = Fp::new(p)?;
        if r == 0 {
            return Err(Error::InvalidParameter(
                "extension degree must be at least 1".into(),
            ));
        }
        let modulus = if r == 1 {
            FpPoly::x()
        } else {
            least_irreducible(&fp, r)?
        };
        Self::with_modulus(p, modulus.coeffs().to_vec())
    }

    /// `modulus` is given constant term first and must be monic irreducible.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        let fp = Fp::new(p)?;
        let m = FpPoly::new(&fp, modulus);
        let r = m
            .degree()
            .finite()
            .filter(|&d| d >= 1)
            .ok_or(Error::ConstantPolynomial)?;
        if !m.is_monic() {
            return Err(Error::NotMonic);
        }
        if r > 1 && !is_irreducible(&fp, &m)? {
            return Err(Error::Reducible);
        }
        let identity: Vec<Vec<u32>> = (0..r)
            .map(|i| (0..r).map(|j| u32::from(i == j)).collect())
            .collect();
        Ok(Self {
            fp,
            r,
            modulus: m,
            basis: identity.clone(),
            to_basis: identity,
        })
    }

    /// Replaces the ordered basis; `basis[i]` is given in polynomial-basis coordinates.
    pub fn with_basis(mut self, basis: Vec<FieldElem>) -> Result<Self> {
        if basis.len() != self.r || basis.iter().any(|b| b.0.len() != self.r) {
            return Err(Error::InvalidParameter(format!(
                "basis must have {} elements of length {}",
                self.r, self.r
            )));
        }
        // columns of B are the basis vectors; coordinates x solve B x = xi
        let b: Vec<Vec<u32>> = (0..self.r)
            .map(|row| basis.iter().map(|e| e.0[row] % self.fp.p()).collect())
            .collect();
        let inv = invert(&self.fp, &b)
            .ok_or_else(|| Error::InvalidParameter("basis is not linearly independent".into()))?;
        self.basis = basis.into_iter().map(|e| e.0).collect();
        self.to_basis = inv;
        Ok(self)
    }

    pub fn p(&self) -> u32 {
        self.fp.p()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn prime_field(&self) -> &Fp {
        &self.fp
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    pub fn basis(&self) -> Vec<FieldElem> {
        self.basis.iter().cloned().map(FieldElem).collect()
    }

    pub fn order(&self) -> u128 {
        (self.p() as u128).pow(self.r as u32)
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(vec![0; self.r])
    }

    pub fn one(&self) -> FieldElem {
        let mut c = vec![0; self.r];
        c[0] = 1;
        FieldElem(c)
    }

    /// Embeds c in F_p.
    pub fn scalar(&self, c: u32) -> FieldElem {
        let mut v = vec![0; self.r];
        v[0] = c % self.p();
        FieldElem(v)
    }

    /// Element with the given polynomial-basis coordinates.
    pub fn from_coords(&self, coords: &[u32]) -> Result<FieldElem> {
        if coords.len() != self.r {
            return Err(Error::ContextMismatch);
        }
        Ok(FieldElem(coords.iter().map(|&c| c % self.p()).collect()))
    }

    /// Element from its index `sum c_i p^i`, `0 <= index < q`.
    pub fn from_index(&self, index: u128) -> FieldElem {
        let p = self.p() as u128;
        let mut rest = index;
        FieldElem(
            (0..self.r)
                .map(|_| {
                    let c = (rest % p) as u32;
                    rest /= p;
                    c
                })
                .collect(),
        )
    }

    pub fn index_of(&self, a: &FieldElem) -> u128 {
        a.0.iter()
            .rev()
            .fold(0u128, |acc, &c| acc * self.p() as u128 + c as u128)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order()).map(|i| self.from_index(i))
    }

    fn check(&self, a: &FieldElem) -> Result<()> {
        if a.0.len() == self.r && a.0.iter().all(|&c| c < self.p()) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Coordinates of `a` in the ordered basis.
    pub fn basis_coords(&self, a: &FieldElem) -> Result<Vec<u32>> {
        self.check(a)?;
        let f = &self.fp;
        Ok(self
            .to_basis
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&a.0)
                    .fold(0, |acc, (&m, &c)| f.add(acc, f.mul(m, c)))
            })
            .collect())
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| self.fp.add(x, y))
                .collect(),
        )
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| self.fp.sub(x, y))
                .collect(),
        )
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldElem(a.0.iter().map(|&x| self.fp.neg(x)).collect())
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let f = &self.fp;
        let r = self.r;
        let mut prod = vec![0u32; 2 * r - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(x, y));
            }
        }
        // reduce with the monic modulus: a^r = -(m_0 + ... + m_{r-1} a^{r-1})
        let m = self.modulus.coeffs();
        for k in (r..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &mj) in m[..r].iter().enumerate() {
                prod[k - r + j] = f.sub(prod[k - r + j], f.mul(c, mj));
            }
        }
        prod.truncate(r);
        FieldElem(prod)
    }

    pub fn pow(&self, a: &FieldElem, mut e: u128) -> FieldElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero element (`a^{q-2}`).
    pub fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        if a.0.iter().all(|&c| c == 0) {
            return None;
        }
        Some(self.pow(a, self.order() - 2))
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }
}

/// Gauss-Jordan inverse of a square matrix over F_p.
fn invert(f: &Fp, m: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    let n = m.len();
    let mut a: Vec<Vec<u32>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot);
        let inv = f.inv(a[col][col]);
        for v in a[col].iter_mut() {
            *v = f.mul(*v, inv);
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let factor = a[r][col];
                let pivot_row = a[col].clone();
                for (v, &pv) in a[r].iter_mut().zip(&pivot_row) {
                    *v = f.sub(*v, f.mul(factor, pv));
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Polynomial over F_{p^r}, constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn new(ctx: &FieldCtx, coeffs: Vec<FieldElem>) -> Result<Self> {
        for c in &coeffs {
            ctx.check(c)?;
        }
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| ctx.is_zero(c)) {
            coeffs.pop();
        }
        Ok(Self { coeffs })
    }

    /// Polynomial with coefficients in the prime field, e.g. `x^2 + x` from `[0, 1, 1]`.
    pub fn from_prime_coeffs(ctx: &FieldCtx, coeffs: &[i64]) -> Self {
        let f = ctx.prime_field();
        let c = coeffs.iter().map(|&a| ctx.scalar(f.from_i64(a))).collect();
        Self::new(ctx, c).expect("scalars belong to the context")
    }

    /// Parses `c0,c1,...` where each coefficient is a field element index `sum x_i p^i`.
    pub fn parse(ctx: &FieldCtx, text: &str) -> Result<Self> {
        let idx = super::poly::parse_coeff_list(text)?;
        let coeffs = idx
            .into_iter()
            .map(|i| {
                if i < 0 || i as u128 >= ctx.order() {
                    Err(Error::Parse(format!(
                        "coefficient index {i} outside F_{}",
                        ctx.order()
                    )))
                } else {
                    Ok(ctx.from_index(i as u128))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx, coeffs)
    }

    pub fn to_text(&self, ctx: &FieldCtx) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| ctx.index_of(c).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn eval(&self, ctx: &FieldCtx, x: &FieldElem) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(ctx.zero(), |acc, c| ctx.add(&ctx.mul(&acc, x), c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn default_modulus_is_least_irreducible() {
        let ctx = FieldCtx::new(2, 2).unwrap();
        assert_eq!(ctx.modulus().coeffs(), &[1, 1, 1]);
        let ctx = FieldCtx::new(3, 2).unwrap();
        assert_eq!(ctx.modulus().coeffs(), &[1, 0, 1]);
        assert_eq!(
            FieldCtx::with_modulus(2, vec![1, 0, 1]),
            Err(Error::Reducible)
        );
        assert_eq!(
            FieldCtx::with_modulus(3, vec![1, 0, 2]),
            Err(Error::NotMonic)
        );
        assert!(FieldCtx::new(4, 2).is_err());
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_order_q_minus_1() {
        let ctx = FieldCtx::new(3, 3).unwrap();
        let q = ctx.order();
        for a in ctx.elements().skip(1) {
            assert_eq!(ctx.pow(&a, q - 1), ctx.one());
        }
        let orders: Vec<u128> = ctx
            .elements()
            .skip(1)
            .map(|a| (1..q).find(|&k| ctx.pow(&a, k) == ctx.one()).unwrap())
            .collect();
        assert!(orders.contains(&(q - 1)));
    }

    #[test]
    fn basis_change() {
        let ctx = FieldCtx::new(5, 2).unwrap();
        // basis (1 + a, a)
        let b = vec![
            ctx.from_coords(&[1, 1]).unwrap(),
            ctx.from_coords(&[0, 1]).unwrap(),
        ];
        let ctx2 = ctx.clone().with_basis(b).unwrap();
        // a = 0 * (1 + a) + 1 * a ; 1 = 1*(1+a) - a
        assert_eq!(
            ctx2.basis_coords(&ctx.from_coords(&[0, 1]).unwrap())
                .unwrap(),
            vec![0, 1]
        );
        assert_eq!(
            ctx2.basis_coords(&ctx.from_coords(&[1, 0]).unwrap())
                .unwrap(),
            vec![1, 4]
        );
        let dependent = vec![
            ctx.from_coords(&[1, 2]).unwrap(),
            ctx.from_coords(&[2, 4]).unwrap(),
        ];
        assert!(ctx.clone().with_basis(dependent).is_err());
    }

    #[test]
    fn uni_poly_eval_and_text() {
        let ctx = FieldCtx::new(5, 2).unwrap();
        let f = UniPoly::from_prime_coeffs(&ctx, &[0, 1, 1]);
        assert_eq!(f.degree(), Degree::Finite(2));
        let x = ctx.from_coords(&[2, 0]).unwrap();
        assert_eq!(f.eval(&ctx, &x), ctx.scalar(6 % 5));
        let g = UniPoly::parse(&ctx, &f.to_text(&ctx)).unwrap();
        assert_eq!(f, g);
        assert!(UniPoly::parse(&ctx, "25").is_err());
        assert_eq!(
            UniPoly::parse(&ctx, "0,0").unwrap().degree(),
            Degree::NegInfinity
        );
    }

    fn field_strategy() -> impl Strategy<Value = (u32, usize)> {
        (
            prop::sample::select(vec![2u32, 3, 5, 7, 11, 13]),
            1usize..=4,
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn field_axioms((p, r) in field_strategy(), seeds in prop::array::uniform3(any::<u64>())) {
            let ctx = FieldCtx::new(p, r).unwrap();
            let q = ctx.order();
            let [a, b, c] = seeds.map(|s| ctx.from_index(s as u128 % q));
            prop_assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)));
            prop_assert_eq!(ctx.add(&ctx.add(&a, &b), &c), ctx.add(&a, &ctx.add(&b, &c)));
            prop_assert_eq!(ctx.mul(&a, &ctx.add(&b, &c)), ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c)));
            prop_assert_eq!(ctx.mul(&a, &b), ctx.mul(&b, &a));
            if let Some(inv) = ctx.inv(&a) {
                prop_assert_eq!(ctx.mul(&a, &inv), ctx.one());
            } else {
                prop_assert!(ctx.is_zero(&a));
            }
            // Frobenius is additive
            let lhs = ctx.pow(&ctx.add(&a, &b), p as u128);
            let rhs = ctx.add(&ctx.pow(&a, p as u128), &ctx.pow(&b, p as u128));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
