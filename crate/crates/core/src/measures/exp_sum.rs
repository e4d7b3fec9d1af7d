//! Grid estimate of `sup_{|z|=1, m<=N} |sum_{n<m} (-1)^{s_n} z^n|`.

use rayon::prelude::*;

use super::well_distribution::signs;
use crate::error::{Error, Result};

/// Maximum over `m <= N` and the `grid` points `z = e(j/grid)`. A lower
/// estimate of the supremum over the unit circle.
pub fn exponential_sum_sup(prefix: &[u8], grid: usize) -> Result<f64> {
    if grid == 0 {
        return Err(Error::InvalidParameter(
            "grid must have at least one point".into(),
        ));
    }
    let x = signs(prefix)?;
    // z^n = w^{(j n) mod grid}, read from a table so no error accumulates
    let table: Vec<(f64, f64)> = (0..grid)
        .map(|k| {
            let a = std::f64::consts::TAU * k as f64 / grid as f64;
            (a.cos(), a.sin())
        })
        .collect();
    let best = (0..grid)
        .into_par_iter()
        .map(|j| {
            let (mut re, mut im, mut best) = (0.0f64, 0.0f64, 0.0f64);
            let mut k = 0usize;
            for &v in &x {
                let (c, s) = table[k];
                re += v as f64 * c;
                im += v as f64 * s;
                best = best.max(re.hypot(im));
                k += j;
                if k >= grid {
                    k -= grid;
                }
            }
            best
        })
        .reduce(|| 0.0, f64::max);
    Ok(best)
}
