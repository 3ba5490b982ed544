//! Exact computations with primary ideals and their Noetherian operators.

pub mod error;
pub mod field;
pub mod groebner;
pub mod inverse;
pub mod join;
pub mod poly;
pub mod primary;
pub mod weyl;

pub use error::{Error, Result};
