//! Incremental Gaussian elimination over F_p for finding the first linear
//! dependency among a sequence of columns.

use super::fp::Fp;
use super::gf2::BitVec;
use super::series::TruncatedSeries;

#[derive(Debug, Clone)]
enum Rows {
    /// reduced column and its combination of inserted columns, both bit-packed
    Bits(Vec<(usize, BitVec, Vec<u64>)>),
    Dense(Vec<(usize, Vec<u32>, Vec<u32>)>),
}

/// Columns are inserted one at a time. Each stored vector is reduced against
/// all earlier ones, so a new column reduces to zero exactly when it depends
/// on the columns before it.
#[derive(Debug, Clone)]
pub struct ColumnBasis {
    fp: Fp,
    len: usize,
    inserted: usize,
    rows: Rows,
}

impl ColumnBasis {
    pub fn new(fp: Fp, len: usize) -> Self {
        let rows = if fp.p() == 2 {
            Rows::Bits(Vec::new())
        } else {
            Rows::Dense(Vec::new())
        };
        Self {
            fp,
            len,
            inserted: 0,
            rows,
        }
    }

    pub fn len(&self) -> usize {
        self.inserted
    }

    pub fn is_empty(&self) -> bool {
        self.inserted == 0
    }

    pub fn rank(&self) -> usize {
        match &self.rows {
            Rows::Bits(r) => r.len(),
            Rows::Dense(r) => r.len(),
        }
    }

    /// Inserts a column. If it depends on the earlier ones, returns the
    /// coefficients `v` (one per inserted column, the new one last) with
    /// `sum v_j col_j = 0`, normalized so the first nonzero entry is 1; the
    /// column is then not stored.
    pub fn push(&mut self, column: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(column.len(), self.len, "column length");
        match self.rows {
            Rows::Bits(_) => {
                let bits: Vec<u8> = column.iter().map(|&c| (c & 1) as u8).collect();
                self.push_bits(&BitVec::from_bits(&bits))
            }
            Rows::Dense(_) => self.push_dense(column.iter().map(|&c| c % self.fp.p()).collect()),
        }
    }

    pub fn push_series(&mut self, column: &TruncatedSeries) -> Option<Vec<u32>> {
        match column.bits() {
            Some(b) if matches!(self.rows, Rows::Bits(_)) => self.push_bits(b),
            _ => self.push(&column.to_vec()),
        }
    }

    fn push_bits(&mut self, column: &BitVec) -> Option<Vec<u32>> {
        assert_eq!(column.len(), self.len, "column length");
        let Rows::Bits(rows) = &mut self.rows else {
            unreachable!()
        };
        let m = self.inserted;
        self.inserted += 1;
        let words = (m + 1).div_ceil(64);
        let mut v = column.clone();
        let mut combo = vec![0u64; words];
        combo[m / 64] |= 1 << (m % 64);
        for (pivot, row, row_combo) in rows.iter() {
            if v.get(*pivot) {
                v.xor_assign(row);
                for (a, b) in combo.iter_mut().zip(row_combo) {
                    *a ^= b;
                }
            }
        }
        match v.first_one() {
            Some(pivot) => {
                rows.push((pivot, v, combo));
                None
            }
            None => Some(
                (0..=m)
                    .map(|j| (combo[j / 64] >> (j % 64) & 1) as u32)
                    .collect(),
            ),
        }
    }

    fn push_dense(&mut self, column: Vec<u32>) -> Option<Vec<u32>> {
        let f = self.fp;
        let Rows::Dense(rows) = &mut self.rows else {
            unreachable!()
        };
        let m = self.inserted;
        self.inserted += 1;
        let mut v = column;
        let mut combo = vec![0u32; m + 1];
        combo[m] = 1;
        for (pivot, row, row_combo) in rows.iter() {
            let c = v[*pivot];
            if c != 0 {
                // stored rows have 1 at their pivot
                for (a, &b) in v.iter_mut().zip(row) {
                    if b != 0 {
                        *a = f.sub(*a, f.mul(c, b));
                    }
                }
                for (a, &b) in combo.iter_mut().zip(row_combo) {
                    if b != 0 {
                        *a = f.sub(*a, f.mul(c, b));
                    }
                }
            }
        }
        match v.iter().position(|&c| c != 0) {
            Some(pivot) => {
                let inv = f.inv(v[pivot]);
                for a in v.iter_mut().chain(combo.iter_mut()) {
                    *a = f.mul(*a, inv);
                }
                rows.push((pivot, v, combo));
                None
            }
            None => Some(normalize(&f, combo)),
        }
    }
}

fn normalize(f: &Fp, mut v: Vec<u32>) -> Vec<u32> {
    if let Some(&lead) = v.iter().find(|&&c| c != 0) {
        let inv = f.inv(lead);
        for a in v.iter_mut() {
            *a = f.mul(*a, inv);
        }
    }
    v
}

/// A nonzero `v` with `sum v_j columns[j] = 0`, or `None` when the columns
/// are independent. The witness comes from the first column that depends on
/// its predecessors; entries after it are zero.
pub fn kernel_vector(fp: Fp, columns: &[Vec<u32>]) -> Option<Vec<u32>> {
    let len = columns.first()?.len();
    let mut basis = ColumnBasis::new(fp, len);
    for col in columns {
        if let Some(mut v) = basis.push(col) {
            v.resize(columns.len(), 0);
            return Some(v);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn combine(f: &Fp, columns: &[Vec<u32>], v: &[u32]) -> Vec<u32> {
        let mut acc = vec![0; columns[0].len()];
        for (col, &c) in columns.iter().zip(v) {
            for (a, &x) in acc.iter_mut().zip(col) {
                *a = f.add(*a, f.mul(c, x));
            }
        }
        acc
    }

    /// Row-reduction rank, written independently of `ColumnBasis`.
    fn rank_oracle(f: &Fp, columns: &[Vec<u32>]) -> usize {
        let mut m: Vec<Vec<u32>> = columns.to_vec();
        let rows = m.first().map_or(0, |c| c.len());
        let mut rank = 0;
        for r in 0..rows {
            let Some(k) = (rank..m.len()).find(|&k| m[k][r] != 0) else {
                continue;
            };
            m.swap(rank, k);
            let inv = f.inv(m[rank][r]);
            let pivot: Vec<u32> = m[rank].iter().map(|&x| f.mul(x, inv)).collect();
            for k in 0..m.len() {
                if k != rank {
                    let c = m[k][r];
                    for (a, &b) in m[k].iter_mut().zip(&pivot) {
                        *a = f.sub(*a, f.mul(c, b));
                    }
                }
            }
            m[rank] = pivot;
            rank += 1;
        }
        rank
    }

    #[test]
    fn identity_columns_are_independent() {
        for p in [2u32, 3, 7] {
            let f = Fp::new(p).unwrap();
            let cols: Vec<Vec<u32>> = (0..5)
                .map(|i| (0..5).map(|j| u32::from(i == j)).collect())
                .collect();
            assert_eq!(kernel_vector(f, &cols), None);
        }
    }

    #[test]
    fn equal_columns() {
        for p in [2u32, 5, 13] {
            let f = Fp::new(p).unwrap();
            let c = vec![1, 0, 2 % p, 1];
            assert_eq!(kernel_vector(f, &[c.clone(), c]), Some(vec![1, p - 1]));
        }
    }

    #[test]
    fn random_instances_agree_with_rank_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [2u32, 3, 5] {
            let f = Fp::new(p).unwrap();
            for _ in 0..200 {
                // 10 rows, 6 columns, often rank deficient
                let cols: Vec<Vec<u32>> = (0..6)
                    .map(|_| {
                        (0..10)
                            .map(|_| {
                                if rng.gen_bool(0.3) {
                                    rng.gen_range(0..p)
                                } else {
                                    0
                                }
                            })
                            .collect()
                    })
                    .collect();
                let rank = rank_oracle(&f, &cols);
                match kernel_vector(f, &cols) {
                    None => assert_eq!(rank, 6),
                    Some(v) => {
                        assert!(rank < 6);
                        assert!(v.iter().any(|&c| c != 0));
                        assert!(combine(&f, &cols, &v).iter().all(|&c| c == 0));
                    }
                }
                let mut basis = ColumnBasis::new(f, 10);
                for c in &cols {
                    basis.push(c);
                }
                assert_eq!(basis.rank(), rank);
            }
        }
    }
}
