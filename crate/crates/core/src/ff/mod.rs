//! Thue-Morse and Rudin-Shapiro functions on F_{p^r} and on monic polynomials
//! over F_p, with exhaustive value counts.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::algebra::{enumerate_monic_irreducibles, FieldCtx, FieldElem, Fp, FpPoly, UniPoly};
use crate::error::{Error, Result};

pub use crate::algebra::poly::DEFAULT_ENUMERATION_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DigitKind {
    ThueMorse,
    RudinShapiro,
}

impl DigitKind {
    pub fn name(self) -> &'static str {
        match self {
            DigitKind::ThueMorse => "T",
            DigitKind::RudinShapiro => "R",
        }
    }

    /// `T = sum x_i`, `R = sum_{i<r} x_i x_{i+1}` on a coordinate vector.
    pub fn apply(self, fp: &Fp, x: &[u32]) -> u32 {
        match self {
            DigitKind::ThueMorse => x.iter().fold(0, |acc, &c| fp.add(acc, c)),
            DigitKind::RudinShapiro => x
                .windows(2)
                .fold(0, |acc, w| fp.add(acc, fp.mul(w[0], w[1]))),
        }
    }
}

impl std::str::FromStr for DigitKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "t" | "thue-morse" | "thue_morse" => Ok(DigitKind::ThueMorse),
            "r" | "rudin-shapiro" | "rudin_shapiro" => Ok(DigitKind::RudinShapiro),
            _ => Err(Error::Parse(format!("unknown digit function '{s}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DigitFunction {
    ctx: FieldCtx,
    kind: DigitKind,
}

impl DigitFunction {
    pub fn new(ctx: FieldCtx, kind: DigitKind) -> Result<Self> {
        if ctx.r() < 2 {
            return Err(Error::InvalidParameter(
                "digit functions need an extension of degree at least 2".into(),
            ));
        }
        Ok(Self { ctx, kind })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn kind(&self) -> DigitKind {
        self.kind
    }

    pub fn value(&self, xi: &FieldElem) -> Result<u32> {
        let x = self.ctx.basis_coords(xi)?;
        Ok(self.kind.apply(self.ctx.prime_field(), &x))
    }
}

/// `T(xi)` or `R(xi)` on the coordinates of `xi` in the ordered basis.
pub fn digit_value(func: &DigitFunction, xi: &FieldElem) -> Result<u32> {
    func.value(xi)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValueHistogram {
    pub p: u32,
    /// `counts[c]` for `c = 0..p`
    pub counts: Vec<u64>,
    pub domain: u64,
    pub expected: Vec<f64>,
    pub bound: Option<f64>,
}

impl ValueHistogram {
    fn new(p: u32, counts: Vec<u64>, bound: Option<f64>) -> Self {
        let domain = counts.iter().sum();
        let expected = vec![domain as f64 / p as f64; p as usize];
        Self {
            p,
            counts,
            domain,
            expected,
            bound,
        }
    }

    pub fn max_deviation(&self) -> f64 {
        self.counts
            .iter()
            .zip(&self.expected)
            .map(|(&c, &e)| (c as f64 - e).abs())
            .fold(0.0, f64::max)
    }

    /// `None` without an attached bound.
    pub fn within_bound(&self) -> Option<bool> {
        self.bound.map(|b| self.max_deviation() <= b + 1e-9)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("c,count,expected,bound\n");
        for (c, (&n, &e)) in self.counts.iter().zip(&self.expected).enumerate() {
            let b = self.bound.map(|b| b.to_string()).unwrap_or_default();
            let _ = writeln!(out, "{c},{n},{e},{b}");
        }
        out
    }
}

fn check_cap(ctx: &FieldCtx, cap: u128) -> Result<()> {
    if ctx.order() > cap {
        return Err(Error::CapExceeded {
            size: ctx.order(),
            cap,
        });
    }
    Ok(())
}

fn degree_of(f: &UniPoly) -> Result<usize> {
    match f.degree().finite() {
        Some(d) if d >= 1 => Ok(d),
        _ => Err(Error::ConstantPolynomial),
    }
}

/// `(d-1) p^{r/2}`
pub fn weil_bound(p: u32, r: usize, d: usize) -> f64 {
    (d as f64 - 1.0) * (p as f64).powf(r as f64 / 2.0)
}

/// Enumerates F_q in blocks of the top coordinate and merges partial counts.
fn par_histogram<F>(ctx: &FieldCtx, eval: F) -> Vec<u64>
where
    F: Fn(&FieldElem) -> usize + Sync,
{
    let p = ctx.p() as usize;
    let order = ctx.order();
    let block = order / p as u128;
    (0..p as u128)
        .into_par_iter()
        .map(|top| {
            let mut local = vec![0u64; p];
            for i in top * block..(top + 1) * block {
                local[eval(&ctx.from_index(i))] += 1;
            }
            local
        })
        .reduce(
            || vec![0u64; p],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

/// Histogram of `fn(f(xi))` over all of F_q. For T and `p` not dividing
/// `deg f` the deviation bound `(d-1) p^{r/2}` is attached.
pub fn count_along_polynomial(
    func: &DigitFunction,
    f: &UniPoly,
    cap: u128,
) -> Result<ValueHistogram> {
    let ctx = &func.ctx;
    let d = degree_of(f)?;
    check_cap(ctx, cap)?;
    for c in f.coeffs() {
        ctx.basis_coords(c)?;
    }
    let counts = par_histogram(ctx, |xi| {
        func.value(&f.eval(ctx, xi)).expect("same context") as usize
    });
    let bound = (func.kind == DigitKind::ThueMorse && d % ctx.p() as usize != 0)
        .then(|| weil_bound(ctx.p(), ctx.r(), d));
    Ok(ValueHistogram::new(ctx.p(), counts, bound))
}

/// The T-histogram of `f` rebuilt from additive character sums
/// `count(c) = (1/p) sum_h sum_xi e(h (T(f(xi)) - c) / p)`. T is evaluated as
/// a linear form on polynomial-basis coordinates, not through the basis change.
pub fn character_sum_counts(func: &DigitFunction, f: &UniPoly, cap: u128) -> Result<Vec<f64>> {
    let ctx = &func.ctx;
    if func.kind != DigitKind::ThueMorse {
        return Err(Error::InvalidParameter(
            "character sums apply to the linear function T".into(),
        ));
    }
    degree_of(f)?;
    check_cap(ctx, cap)?;
    let fp = ctx.prime_field();
    let r = ctx.r();
    // w_j = T(a^j), so T(y) = sum_j y_j w_j for y in polynomial coordinates
    let w: Vec<u32> = (0..r)
        .map(|j| {
            let mut unit = vec![0u32; r];
            unit[j] = 1;
            let e = ctx.from_coords(&unit).expect("unit vector");
            func.value(&e).expect("same context")
        })
        .collect();
    let p = ctx.p() as usize;
    let sums: Vec<(f64, f64)> = (0..p)
        .into_par_iter()
        .map(|h| {
            let (mut re, mut im) = (0.0, 0.0);
            for xi in ctx.elements() {
                let y = f.eval(ctx, &xi);
                let t = y
                    .coords()
                    .iter()
                    .zip(&w)
                    .fold(0, |acc, (&a, &b)| fp.add(acc, fp.mul(a, b)));
                let ang = TAU * ((h * t as usize) % p) as f64 / p as f64;
                re += ang.cos();
                im += ang.sin();
            }
            (re, im)
        })
        .collect();
    Ok((0..p)
        .map(|c| {
            let total: f64 = sums
                .iter()
                .enumerate()
                .map(|(h, &(re, im))| {
                    let ang = -TAU * ((h * c) % p) as f64 / p as f64;
                    re * ang.cos() - im * ang.sin()
                })
                .sum();
            total / p as f64
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointCount {
    pub count: u64,
    /// `p^{r-s}`
    pub expected: f64,
    pub bound: f64,
}

impl JointCount {
    pub fn deviation(&self) -> f64 {
        (self.count as f64 - self.expected).abs()
    }

    pub fn within_bound(&self) -> bool {
        self.deviation() <= self.bound + 1e-9
    }
}

/// Number of `xi` with `T(f(xi + alpha_i)) = c_i` for every `i`.
pub fn joint_shift_count(
    ctx: &FieldCtx,
    f: &UniPoly,
    shifts: &[FieldElem],
    targets: &[u32],
    cap: u128,
) -> Result<JointCount> {
    let d = degree_of(f)?;
    let p = ctx.p();
    let s = shifts.len();
    if s != targets.len() || s == 0 {
        return Err(Error::InvalidParameter(
            "need one target per shift and at least one shift".into(),
        ));
    }
    if s > d {
        return Err(Error::InvalidParameter(format!(
            "{s} shifts exceed the degree {d}"
        )));
    }
    if d >= p as usize {
        return Err(Error::InvalidParameter(format!(
            "degree {d} must be below p = {p}"
        )));
    }
    for (i, a) in shifts.iter().enumerate() {
        ctx.basis_coords(a)?;
        if shifts[..i].contains(a) {
            return Err(Error::InvalidParameter("shifts must be distinct".into()));
        }
    }
    if let Some(&c) = targets.iter().find(|&&c| c >= p) {
        return Err(Error::InvalidParameter(format!("target {c} outside F_{p}")));
    }
    check_cap(ctx, cap)?;
    let func = DigitFunction::new(ctx.clone(), DigitKind::ThueMorse)?;
    let order = ctx.order();
    let count = (0..order)
        .into_par_iter()
        .filter(|&i| {
            let xi = ctx.from_index(i);
            shifts.iter().zip(targets).all(|(a, &c)| {
                let y = f.eval(ctx, &ctx.add(&xi, a));
                func.value(&y).expect("same context") == c
            })
        })
        .count() as u64;
    Ok(JointCount {
        count,
        expected: (p as f64).powi((ctx.r() - s) as i32),
        bound: weil_bound(p, ctx.r(), d),
    })
}

/// T or R of a monic `f = t^r + x_1 t^{r-1} + ... + x_r` over F_p. T is
/// `f(1) - 1`; R reads `x_1` as the coefficient of `t^{r-1}`.
pub fn polyring_value(kind: DigitKind, fp: &Fp, f: &FpPoly) -> Result<u32> {
    let r = match f.degree().finite() {
        Some(r) if r >= 1 => r,
        _ => return Err(Error::ConstantPolynomial),
    };
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let x: Vec<u32> = (0..r).map(|i| f.coeff(r - 1 - i)).collect();
    Ok(kind.apply(fp, &x))
}

/// Histogram of T or R over the monic irreducibles of degree r. For T with
/// `r = 2` and odd p the expected column is `(p - (c+1 | p)) / 2`, and 0 at
/// `c = -1`; for R with `r = 2` it is `(p - 1) / 2` at `c = 0`.
pub fn count_over_irreducibles(
    kind: DigitKind,
    p: u32,
    r: usize,
    cap: u128,
) -> Result<ValueHistogram> {
    let fp = Fp::new(p)?;
    let irr = enumerate_monic_irreducibles(&fp, r, cap)?;
    let mut counts = vec![0u64; p as usize];
    for f in &irr {
        counts[polyring_value(kind, &fp, f)? as usize] += 1;
    }
    let mut hist = ValueHistogram::new(p, counts, None);
    if r == 2 && p % 2 == 1 {
        match kind {
            DigitKind::ThueMorse => {
                hist.expected = (0..p).map(|c| t_closed_form(&fp, c) as f64).collect();
            }
            DigitKind::RudinShapiro => hist.expected[0] = ((p - 1) / 2) as f64,
        }
    }
    Ok(hist)
}

/// Number of monic irreducible quadratics over F_p with `T = c`, p odd.
pub fn t_closed_form(fp: &Fp, c: u32) -> u64 {
    let p = fp.p();
    if fp.add(c, 1) == 0 {
        return 0;
    }
    ((p as i64 - fp.legendre(fp.add(c, 1)) as i64) / 2) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tm(p: u32, r: usize) -> DigitFunction {
        DigitFunction::new(FieldCtx::new(p, r).unwrap(), DigitKind::ThueMorse).unwrap()
    }

    #[test]
    fn digit_values() {
        let ctx = FieldCtx::new(2, 2).unwrap();
        let t = DigitFunction::new(ctx.clone(), DigitKind::ThueMorse).unwrap();
        let r = DigitFunction::new(ctx.clone(), DigitKind::RudinShapiro).unwrap();
        let xi = ctx.from_coords(&[1, 1]).unwrap();
        assert_eq!((t.value(&xi).unwrap(), r.value(&xi).unwrap()), (0, 1));
        assert_eq!(
            (t.value(&ctx.zero()).unwrap(), r.value(&ctx.zero()).unwrap()),
            (0, 0)
        );
        assert!(DigitFunction::new(FieldCtx::new(5, 1).unwrap(), DigitKind::ThueMorse).is_err());
        let other = FieldCtx::new(2, 3).unwrap();
        assert!(matches!(t.value(&other.one()), Err(Error::ContextMismatch)));
    }

    #[test]
    fn identity_polynomial_is_balanced() {
        for (p, r) in [(2, 3), (3, 2), (5, 2), (3, 3)] {
            let t = tm(p, r);
            let f = UniPoly::from_prime_coeffs(t.ctx(), &[0, 1]);
            let h = count_along_polynomial(&t, &f, DEFAULT_ENUMERATION_CAP).unwrap();
            let q = (p as u64).pow(r as u32 - 1);
            assert!(h.counts.iter().all(|&c| c == q));
            assert_eq!(h.bound, Some(0.0));
        }
    }

    #[test]
    fn squares_over_f25() {
        let t = tm(5, 2);
        let f = UniPoly::from_prime_coeffs(t.ctx(), &[0, 0, 1]);
        let h = count_along_polynomial(&t, &f, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(h.domain, 25);
        assert_eq!(h.bound, Some(5.0));
        assert_eq!(h.within_bound(), Some(true));
        let chars = character_sum_counts(&t, &f, DEFAULT_ENUMERATION_CAP).unwrap();
        for (c, &n) in h.counts.iter().enumerate() {
            assert!((chars[c] - n as f64).abs() < 1e-6, "c={c}");
        }
        assert!(h.to_csv().starts_with("c,count,expected,bound\n0,"));
    }

    #[test]
    fn degenerate_and_capped() {
        let t = tm(3, 3);
        let constant = UniPoly::from_prime_coeffs(t.ctx(), &[2]);
        assert!(matches!(
            count_along_polynomial(&t, &constant, DEFAULT_ENUMERATION_CAP),
            Err(Error::ConstantPolynomial)
        ));
        let f = UniPoly::from_prime_coeffs(t.ctx(), &[0, 1, 1]);
        assert!(matches!(
            count_along_polynomial(&t, &f, 10),
            Err(Error::CapExceeded { .. })
        ));
        let r = DigitFunction::new(t.ctx().clone(), DigitKind::RudinShapiro).unwrap();
        let h = count_along_polynomial(&r, &f, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(h.counts.iter().sum::<u64>(), 27);
        assert_eq!(h.bound, None);
    }

    #[test]
    fn joint_counts() {
        let ctx = FieldCtx::new(5, 2).unwrap();
        let f = UniPoly::from_prime_coeffs(&ctx, &[0, 0, 1]);
        let shifts = [ctx.zero(), ctx.one()];
        let j = joint_shift_count(&ctx, &f, &shifts, &[0, 0], DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!((j.expected, j.bound), (1.0, 5.0));
        assert!(j.within_bound());
        // one shift agrees with the plain histogram
        let t = DigitFunction::new(ctx.clone(), DigitKind::ThueMorse).unwrap();
        let h = count_along_polynomial(&t, &f, DEFAULT_ENUMERATION_CAP).unwrap();
        for c in 0..5 {
            let j =
                joint_shift_count(&ctx, &f, &[ctx.zero()], &[c], DEFAULT_ENUMERATION_CAP).unwrap();
            assert_eq!(j.count, h.counts[c as usize]);
        }
        let three = [ctx.zero(), ctx.one(), ctx.scalar(2)];
        assert!(joint_shift_count(&ctx, &f, &three, &[0, 0, 0], DEFAULT_ENUMERATION_CAP).is_err());
        let dup = [ctx.one(), ctx.one()];
        assert!(joint_shift_count(&ctx, &f, &dup, &[0, 0], DEFAULT_ENUMERATION_CAP).is_err());
    }

    #[test]
    fn polyring_examples() {
        let f5 = Fp::new(5).unwrap();
        let f = FpPoly::new(&f5, vec![1, 1, 1]);
        assert_eq!(polyring_value(DigitKind::ThueMorse, &f5, &f).unwrap(), 2);
        let g = FpPoly::new(&f5, vec![3, 2, 1]);
        assert_eq!(polyring_value(DigitKind::RudinShapiro, &f5, &g).unwrap(), 1);
        let nm = FpPoly::new(&f5, vec![1, 2]);
        assert!(matches!(
            polyring_value(DigitKind::ThueMorse, &f5, &nm),
            Err(Error::NotMonic)
        ));
    }

    #[test]
    fn irreducible_histograms() {
        let h =
            count_over_irreducibles(DigitKind::ThueMorse, 5, 2, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!((h.counts[0], h.counts[4]), (2, 0));
        let r = count_over_irreducibles(DigitKind::RudinShapiro, 5, 2, DEFAULT_ENUMERATION_CAP)
            .unwrap();
        assert_eq!(r.counts[0], 2);
        for p in [3u32, 5, 7, 11, 13] {
            let h = count_over_irreducibles(DigitKind::ThueMorse, p, 2, DEFAULT_ENUMERATION_CAP)
                .unwrap();
            for c in 0..p as usize {
                assert_eq!(h.counts[c] as f64, h.expected[c], "p={p} c={c}");
            }
            assert_eq!(h.domain, crate::algebra::necklace_count(p as u64, 2));
        }
    }

    proptest! {
        #[test]
        fn t_is_linear(a in 0u128..343, b in 0u128..343) {
            let t = tm(7, 3);
            let ctx = t.ctx();
            let (x, y) = (ctx.from_index(a), ctx.from_index(b));
            let lhs = t.value(&ctx.add(&x, &y)).unwrap();
            let rhs = ctx.prime_field().add(t.value(&x).unwrap(), t.value(&y).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn irreducibles_never_hit_minus_one(p in prop::sample::select(vec![3u32, 5, 7]), r in 2usize..4) {
            let h = count_over_irreducibles(DigitKind::ThueMorse, p, r, DEFAULT_ENUMERATION_CAP).unwrap();
            prop_assert_eq!(h.counts[p as usize - 1], 0);
        }
    }
}
