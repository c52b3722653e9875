//! Exact weight sums and character-defect counts for the 2-fusion systems of
//! Spin7(q) and Sol(q).

pub mod algebra;
pub mod catalog;
pub mod characters;
pub mod error;
pub mod lie;
pub mod par;
pub mod poly;
pub mod weights;

pub use error::{Error, Result};
