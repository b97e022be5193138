//! Tableau combinatorics, Pitman transforms, characters and conditioned
//! random walks for `gl(n)`, `gl(m,n)` and `q(n)`.
//!
//! All exact quantities use `BigRational`; floating point appears only in
//! Monte Carlo estimates.

pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod insertion;
pub mod json;
pub mod markov;
pub mod multiplicities;
pub mod rational;
pub mod simulate;
pub mod tableau;
pub mod verify;

pub use combinatorics::{AlgebraKind, Letter, Shape, SkewShape, Weight, Word};
pub use error::{Error, Result};
pub use rational::Rational;

/// Limits for exhaustive enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest number of boxes a tableau enumeration may fill.
    pub max_boxes: usize,
    /// Largest number of search nodes (or enumerated words).
    pub max_nodes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_boxes: 8, max_nodes: 1_000_000 }
    }
}

impl Budget {
    pub fn check_boxes(&self, boxes: usize) -> Result<()> {
        if boxes > self.max_boxes {
            return Err(Error::Budget { what: format!("{boxes} boxes"), limit: self.max_boxes });
        }
        Ok(())
    }
}

/// Crate version, stamped into every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
