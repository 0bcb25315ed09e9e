pub mod arith;
pub mod cli;
pub mod closures;
pub mod corpus;
pub mod divisorial;
pub mod error;
pub mod groebner;
pub mod homology;
pub mod ideals;
pub mod poly;
pub mod report;
pub mod semigroup;

pub use error::{Error, Result};
