use thiserror::Error;

/// A value that would break a structural invariant of one of the rings or modules.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("n > 2i−1 in B_i (n = {n}, i = {index})")]
    BlockTruncation { n: u32, index: u32 },
    #[error("torsion monomials need i ≥ 1 and j ≥ 1 (got i = {i}, j = {j})")]
    TorsionIndex { i: u32, j: u32 },
    #[error("ẼC₂ monomials need i ≥ 1 (got i = {0})")]
    TildeIndex(u32),
}
