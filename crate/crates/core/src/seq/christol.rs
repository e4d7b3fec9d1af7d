//! Annihilating polynomials h(x, y) with h(x, G(x)) = 0 for the generating
//! functions of the automatic catalog entries.

use super::catalog::Catalog;
use crate::algebra::{is_prime, BiPoly, Fp, FpPoly};

fn pow(f: &Fp, base: &FpPoly, e: u64) -> FpPoly {
    (0..e).fold(FpPoly::one(), |acc, _| acc.mul(f, base))
}

fn poly(f: &Fp, coeffs: &[i64]) -> FpPoly {
    FpPoly::new(f, coeffs.iter().map(|&c| f.from_i64(c)).collect())
}

fn monomial(f: &Fp, i: usize) -> FpPoly {
    let mut c = vec![0i64; i + 1];
    c[i] = 1;
    poly(f, &c)
}

impl Catalog {
    /// An annihilator over F_p, where p is the alphabet size. `None` for the
    /// Zeckendorf entries and for pattern sequences in a composite base.
    pub fn annihilator(&self) -> Option<BiPoly> {
        let f2 = Fp::new(2).expect("2 is prime");
        let x1 = poly(&f2, &[1, 1]);
        let h = |hs: Vec<FpPoly>| Some(BiPoly::from_y_coeffs(f2, &hs));
        match self {
            Catalog::ThueMorse => h(vec![monomial(&f2, 1), pow(&f2, &x1, 2), pow(&f2, &x1, 3)]),
            Catalog::RudinShapiro => h(vec![monomial(&f2, 3), pow(&f2, &x1, 4), pow(&f2, &x1, 5)]),
            Catalog::Pattern { base, pattern } => {
                if !is_prime(*base as u64) {
                    return None;
                }
                let f = Fp::new(*base).ok()?;
                let p = *base as u64;
                let pl = p.checked_pow(pattern.len() as u32)?;
                let a = Catalog::pattern_value(*base, pattern) as usize;
                let xm1 = poly(&f, &[-1, 1]);
                let mut hs = vec![FpPoly::zero(); p as usize + 1];
                hs[0] = FpPoly::zero().sub(&f, &monomial(&f, a));
                hs[1] = FpPoly::zero().sub(&f, &pow(&f, &xm1, pl));
                hs[p as usize] = pow(&f, &xm1, pl + p - 1);
                Some(BiPoly::from_y_coeffs(f, &hs))
            }
            Catalog::RudinShapiroLike => h(vec![
                monomial(&f2, 2),
                pow(&f2, &x1, 4),
                poly(&f2, &[0, 1, 1, 0, 0, 1, 1]),
                FpPoly::zero(),
                pow(&f2, &x1, 8),
            ]),
            Catalog::BaumSweet => h(vec![
                FpPoly::one(),
                monomial(&f2, 1),
                FpPoly::zero(),
                FpPoly::one(),
            ]),
            Catalog::ThreeSquares => {
                let x8 = pow(&f2, &x1, 8);
                h(vec![
                    poly(&f2, &[0, 1, 1, 1, 0, 1, 1]),
                    x8.clone(),
                    FpPoly::zero(),
                    FpPoly::zero(),
                    x8,
                ])
            }
            Catalog::PaperFolding { .. } => {
                let x4 = pow(&f2, &x1, 4);
                h(vec![monomial(&f2, 1), x4.clone(), x4])
            }
            Catalog::Apwenian => {
                // (x+1)(x y^2 + y) + 1
                h(vec![
                    FpPoly::one(),
                    x1.clone(),
                    x1.mul(&f2, &monomial(&f2, 1)),
                ])
            }
            Catalog::Zero => h(vec![FpPoly::zero(), FpPoly::one()]),
            Catalog::ZeckendorfSum | Catalog::ZeckendorfGap => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bipoly_eval_mod, series_from_sequence, Degree};
    use crate::seq::{automatic_entries, SequenceHandle};

    #[test]
    fn y_degree_and_shift_degree() {
        let entries: Vec<Catalog> = automatic_entries()
            .into_iter()
            .filter(|e| !matches!(e, Catalog::Pattern { .. }))
            .collect();
        let expect = [(2, 1), (2, 3), (4, 4), (3, 0), (4, 7), (2, 3), (2, 0)];
        for (e, (d, m)) in entries.iter().zip(expect) {
            let h = e.annihilator().unwrap();
            assert_eq!(h.y_degree(), Degree::Finite(d), "{e}");
            assert_eq!(h.shift_degree(), Some(m), "{e}");
        }
        let pat = Catalog::Pattern {
            base: 2,
            pattern: vec![1, 1, 1],
        }
        .annihilator()
        .unwrap();
        assert_eq!(
            (pat.y_degree(), pat.shift_degree()),
            (Degree::Finite(2), Some(7))
        );
    }

    #[test]
    fn annihilators_vanish_on_prefixes() {
        let mut entries = automatic_entries();
        entries.push(Catalog::PaperFolding { v0: 1 });
        entries.push(Catalog::Pattern {
            base: 3,
            pattern: vec![2, 1],
        });
        entries.push(Catalog::Pattern {
            base: 2,
            pattern: vec![1, 0, 1],
        });
        for e in entries {
            let h = e.annihilator().unwrap();
            let prefix = SequenceHandle::catalog(e.clone()).prefix(1024).unwrap();
            let g = series_from_sequence(&prefix, *h.field()).unwrap();
            assert!(bipoly_eval_mod(&h, &g).unwrap().is_zero(), "{e}");
        }
    }
}
