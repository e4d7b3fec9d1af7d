//! Automatic sequences and their subsequences under the standard measures of
//! pseudorandomness: linear and maximum-order complexity, well-distribution,
//! correlation of order k, expansion complexity, subword complexity and
//! pattern frequencies, plus the Thue-Morse and Rudin-Shapiro functions on
//! finite fields.

pub mod algebra;
pub mod error;
pub mod ff;
pub mod io;
pub mod measures;
pub mod seq;
pub mod verify;

pub use error::{Error, Result};
