//! Finite sums of monomials with coefficients in ℤ/2.
//!
//! Every ring and module in this crate has a monomial basis, so an element is just the set of
//! monomials whose coefficient is 1. Addition is symmetric difference.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

/// A monomial basis element of a ring in which the product of two monomials is again a monomial
/// or zero.
pub trait Monomial: Ord + Clone {
    fn one() -> Self;

    /// Product of two monomials; `None` means the product is zero.
    fn mul(&self, other: &Self) -> Option<Self>;
}

/// Anything carrying a grading.
pub trait Graded {
    type Degree: Copy + Eq + fmt::Debug;

    fn degree(&self) -> Self::Degree;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("element is not homogeneous")]
pub struct NotHomogeneous;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Sum<M: Ord> {
    terms: BTreeSet<M>,
}

impl<M: Ord> Default for F2Sum<M> {
    fn default() -> Self {
        Self {
            terms: BTreeSet::new(),
        }
    }
}

impl<M: Ord + fmt::Debug> fmt::Debug for F2Sum<M> {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.debug_set().entries(self.terms.iter()).finish()
    }
}

impl<M: Ord + Clone> F2Sum<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_mono(m: M) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &M) -> bool {
        self.terms.contains(m)
    }

    pub fn terms(&self) -> impl Iterator<Item = &M> + '_ {
        self.terms.iter()
    }

    /// Adds a single monomial; a monomial already present cancels.
    pub fn toggle(&mut self, m: M) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// Extends a monomial-level map linearly. `None` from `f` is the zero map on that monomial.
    pub fn map_linear<N, F>(&self, f: F) -> F2Sum<N>
    where
        N: Ord + Clone,
        F: FnMut(&M) -> Option<N>,
    {
        self.terms.iter().filter_map(f).collect()
    }

    /// Extends a monomial-level pairing bilinearly.
    pub fn bilinear<N, O, F>(&self, other: &F2Sum<N>, mut f: F) -> F2Sum<O>
    where
        N: Ord + Clone,
        O: Ord + Clone,
        F: FnMut(&M, &N) -> Option<O>,
    {
        let mut out = F2Sum::zero();
        for x in &self.terms {
            for y in &other.terms {
                if let Some(z) = f(x, y) {
                    out.toggle(z);
                }
            }
        }
        out
    }

    /// The common degree of all terms, `Ok(None)` for zero.
    pub fn homogeneous_degree<D, F>(&self, mut degree: F) -> Result<Option<D>, NotHomogeneous>
    where
        D: PartialEq,
        F: FnMut(&M) -> D,
    {
        let mut found = None;
        for m in &self.terms {
            let d = degree(m);
            match &found {
                None => found = Some(d),
                Some(prev) if *prev != d => return Err(NotHomogeneous),
                _ => {}
            }
        }
        Ok(found)
    }
}

impl<M: Graded + Ord + Clone> F2Sum<M> {
    pub fn degree(&self) -> Result<Option<M::Degree>, NotHomogeneous> {
        self.homogeneous_degree(Graded::degree)
    }
}

impl<M: Monomial> F2Sum<M> {
    pub fn one() -> Self {
        Self::from_mono(M::one())
    }
}

impl<M: Ord + Clone> From<M> for F2Sum<M> {
    fn from(m: M) -> Self {
        Self::from_mono(m)
    }
}

/// Collecting toggles, so repeated monomials cancel in pairs.
impl<M: Ord + Clone> FromIterator<M> for F2Sum<M> {
    fn from_iter<I: IntoIterator<Item = M>>(iter: I) -> Self {
        let mut out = Self::zero();
        for m in iter {
            out.toggle(m);
        }
        out
    }
}

impl<M: Ord + Clone> AddAssign<&F2Sum<M>> for F2Sum<M> {
    fn add_assign(&mut self, rhs: &F2Sum<M>) {
        for m in &rhs.terms {
            self.toggle(m.clone());
        }
    }
}

impl<M: Ord + Clone> Add for &F2Sum<M> {
    type Output = F2Sum<M>;

    fn add(self, rhs: &F2Sum<M>) -> F2Sum<M> {
        self.terms.symmetric_difference(&rhs.terms).cloned().collect()
    }
}

impl<M: Ord + Clone> Add for F2Sum<M> {
    type Output = F2Sum<M>;

    fn add(self, rhs: F2Sum<M>) -> F2Sum<M> {
        &self + &rhs
    }
}

impl<M: Monomial> Mul for &F2Sum<M> {
    type Output = F2Sum<M>;

    fn mul(self, rhs: &F2Sum<M>) -> F2Sum<M> {
        self.bilinear(rhs, Monomial::mul)
    }
}

impl<M: Monomial> Mul for F2Sum<M> {
    type Output = F2Sum<M>;

    fn mul(self, rhs: F2Sum<M>) -> F2Sum<M> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_cancels_mod_two() {
        let x: F2Sum<u8> = [1, 2, 3].into_iter().collect();
        let y: F2Sum<u8> = [2, 3, 4].into_iter().collect();
        let s = &x + &y;
        assert_eq!(s, [1, 4].into_iter().collect());
        assert!((&x + &x).is_zero());
    }

    #[test]
    fn collect_toggles_duplicates() {
        let x: F2Sum<u8> = [5, 5, 5, 7].into_iter().collect();
        assert_eq!(x, [5, 7].into_iter().collect());
    }

    #[test]
    fn homogeneity() {
        let x: F2Sum<i32> = [2, 4, 6].into_iter().collect();
        assert_eq!(x.homogeneous_degree(|m| m % 2), Ok(Some(0)));
        assert_eq!(x.homogeneous_degree(|m| *m), Err(NotHomogeneous));
        assert_eq!(F2Sum::<i32>::zero().homogeneous_degree(|m| *m), Ok(None));
    }
}
