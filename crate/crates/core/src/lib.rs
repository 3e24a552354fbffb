//! Central characters of the queer Lie superalgebra q(N) in exact arithmetic.
//!
//! The generating-function engine in [`character`] produces `chi(c_{2m+1})`
//! as a polynomial in the highest-weight coordinates; [`pbw`] and [`natrep`]
//! are brute-force oracles that recompute the same quantities from the
//! defining relations.

pub mod character;
pub mod error;
pub mod free;
pub mod natrep;
pub mod pbw;
pub mod poly;
pub mod rational;
pub mod series;
pub mod structure;

pub use character::{ChiResult, Engine};
pub use error::{
    CharacterError, NatRepError, ParseRationalError, PbwError, PolyError, StructureError,
};
pub use free::{AlgebraElement, Word};
pub use pbw::{CartanElement, Normalizer};
pub use poly::{Monomial, MultiPoly};
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use structure::{Generator, TriangularClass, WeightVector};
