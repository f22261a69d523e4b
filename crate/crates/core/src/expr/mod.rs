//! Text syntax for ring elements.
//!
//! Parsing happens in two stages. [`parse_raw`] turns a string into a formal sum of Laurent
//! monomials over every known atom; [`crate::ring::parse`] then validates each term against
//! the structure of one ring and builds a normalized element.

mod parse;
mod raw;

use thiserror::Error;

use crate::error::InvariantError;

pub use parse::parse_raw;
pub use raw::{Atom, RawMono, RawSum};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown atom '{name}' at position {pos}")]
    UnknownAtom { name: String, pos: usize },
    #[error("atom '{atom}' is not part of {ring}")]
    AtomNotInRing { atom: Atom, ring: String },
    #[error("term {term}: {violation}")]
    Invalid { term: String, violation: Violation },
    #[error("only single monomials can be inverted (position {pos})")]
    NonMonomialInverse { pos: usize },
    #[error("coefficient {value} at position {pos}: only 0 and 1 are allowed")]
    Coefficient { value: u64, pos: usize },
}

/// The structural rule that a rejected term breaks.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("theta exponent must be 0 or 1 (got {0})")]
    ThetaExponent(i32),
    #[error("every term needs theta")]
    ThetaRequired,
    #[error("negative power of {0} requires theta")]
    NegativeWithoutTheta(Atom),
    #[error("positive power of {0} cannot multiply theta")]
    PositiveWithTheta(Atom),
    #[error("{0} must have a nonnegative exponent")]
    NegativeExponent(Atom),
    #[error("torsion term (negative power of tau_s) requires theta")]
    TorsionNeedsTheta,
    #[error("torsion term cannot contain xi")]
    TorsionWithXi,
    #[error("term needs mu^i with i ≥ 1")]
    MuRequired,
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}
