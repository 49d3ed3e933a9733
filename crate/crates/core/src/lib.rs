//! Exact Betti numbers and homological invariants of glued chordal clique
//! complexes, their skeletons and their Alexander duals.
//!
//! Every closed form has an independent brute-force counterpart in
//! [`oracle`], computed from Hochster's formula over a chosen field.

pub mod betti;
pub mod binomial;
pub mod closed_form;
pub mod complex;
pub mod dual;
pub mod error;
pub mod faces;
pub mod identities;
pub mod oracle;
pub mod poly;

pub use betti::BettiTable;
pub use complex::{FVector, FacetComplex, GluingSpec};
pub use error::{Error, Result};
pub use faces::OracleCap;
pub use oracle::FieldChoice;
pub use poly::IntPolynomial;
