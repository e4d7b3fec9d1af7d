//! Automatic sequences: digit expansions, DFAOs, the sequence catalog and
//! subsequence transforms.

pub mod automaton;
pub mod catalog;
pub mod christol;
pub mod digits;
pub mod floor_power;
pub mod handle;
pub mod sieve;

pub use automaton::{AutomatonSpec, Reading};
pub use catalog::{automatic_entries, Catalog};
pub use digits::{digits, digits_big, zeckendorf, DigitString, ZeckendorfString};
pub use floor_power::FloorPower;
pub use handle::{Index, IndexMap, SequenceHandle};
pub use sieve::PrimeCache;
