//! Prime and extension fields, polynomials, truncated power series and
//! linear algebra over F_p.

pub mod field;
pub mod fp;
pub mod gf2;
pub mod linalg;
pub mod poly;
pub mod series;

pub use field::{FieldCtx, FieldElem, UniPoly};
pub use fp::{is_prime, Fp};
pub use gf2::BitVec;
pub use linalg::{kernel_vector, ColumnBasis};
pub use poly::{
    enumerate_monic_irreducibles, is_irreducible, least_irreducible, necklace_count, Degree, FpPoly,
};
pub use series::{bipoly_eval_mod, series_from_sequence, BiPoly, TruncatedSeries};
