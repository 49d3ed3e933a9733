//! Brute-force verification engine.
//!
//! Betti tables come from Hochster's formula
//! `beta_{i,j} = sum_{|W| = j} dim H~_{j-i-1}(Δ|_W)`, with reduced homology
//! computed by exact rank of boundary matrices. Nothing here calls into the
//! closed forms.

mod hochster;
pub mod linalg;
mod verify;

use std::fmt;
use std::str::FromStr;

pub use hochster::{
    chain_ranks, hilbert_from_faces, hochster_betti, hochster_family, invariants_from_betti,
    numerator_from_counts, reduced_homology, BettiInvariants, ChainRanks, HochsterFamily, HomologyProfile,
};
pub use verify::{verify_all, verify_with, CheckResult, Status, VerificationReport, VerifyOptions};

use crate::error::{Error, Result};

/// Coefficient field for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FieldChoice {
    #[default]
    Rationals,
    Prime(u32),
}

impl FieldChoice {
    pub fn prime(p: u32) -> Result<Self> {
        let is_prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
        if !is_prime || p > 257 {
            return Err(Error::BadField(p));
        }
        Ok(FieldChoice::Prime(p))
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rationals => write!(f, "Q"),
            FieldChoice::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldChoice {
    type Err = Error;

    /// Accepts `q`, `Q`, `f2`, `F3`, ...
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "q" {
            return Ok(FieldChoice::Rationals);
        }
        match lower.strip_prefix('f').and_then(|p| p.parse::<u32>().ok()) {
            Some(p) => FieldChoice::prime(p),
            None => Err(Error::BadField(0)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<FieldChoice>().unwrap(), FieldChoice::Rationals);
        assert_eq!("F3".parse::<FieldChoice>().unwrap(), FieldChoice::Prime(3));
        assert_eq!("f257".parse::<FieldChoice>().unwrap(), FieldChoice::Prime(257));
        assert_eq!("f4".parse::<FieldChoice>(), Err(Error::BadField(4)));
        assert_eq!("f263".parse::<FieldChoice>(), Err(Error::BadField(263)));
        assert!("z".parse::<FieldChoice>().is_err());
        assert_eq!(FieldChoice::Prime(2).to_string(), "F2");
    }
}
