//! Ranks of F₂-linear maps between monomial bases.

use std::collections::{BTreeMap, BTreeSet};

use crate::f2::F2Sum;

/// The matrix of `f` from `source` to the span of `target`, one row per source monomial.
/// Errors with the first image monomial that is not in `target`.
pub(crate) struct Matrix {
    rows: Vec<BTreeSet<usize>>,
}

impl Matrix {
    pub(crate) fn of<S, T, F>(source: &[S], target: &[T], mut f: F) -> Result<Matrix, String>
    where
        T: Ord + Clone + std::fmt::Debug,
        F: FnMut(&S) -> F2Sum<T>,
    {
        let index: BTreeMap<&T, usize> = target.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut rows = Vec::with_capacity(source.len());
        for s in source {
            let mut row = BTreeSet::new();
            for t in f(s).terms() {
                match index.get(t) {
                    Some(&i) => {
                        row.insert(i);
                    }
                    None => return Err(format!("image {t:?} outside the target degree")),
                }
            }
            rows.push(row);
        }
        Ok(Matrix { rows })
    }

    pub(crate) fn rank(&self) -> usize {
        let mut pivots: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for row in &self.rows {
            let mut r = row.clone();
            while let Some(&lead) = r.iter().next_back() {
                match pivots.get(&lead) {
                    Some(p) => r = r.symmetric_difference(p).copied().collect(),
                    None => {
                        pivots.insert(lead, r);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }

    pub(crate) fn nullity(&self) -> usize {
        self.rows.len() - self.rank()
    }
}

/// Whether `g ∘ f` vanishes on every source monomial.
pub(crate) fn composite_vanishes<S, M: Ord + Clone, T: Ord + Clone>(
    source: &[S],
    mut f: impl FnMut(&S) -> F2Sum<M>,
    mut g: impl FnMut(&F2Sum<M>) -> F2Sum<T>,
) -> bool {
    source.iter().all(|s| g(&f(s)).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        let src = [0u8, 1, 2];
        let tgt = [10u8, 11];
        // 0 ↦ 10, 1 ↦ 10 + 11, 2 ↦ 11: rank 2
        let m = Matrix::of(&src, &tgt, |&s| match s {
            0 => F2Sum::from_mono(10),
            1 => [10, 11].into_iter().collect(),
            _ => F2Sum::from_mono(11),
        })
        .unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.nullity(), 1);
        assert!(Matrix::of(&src, &tgt, |_| F2Sum::from_mono(12u8)).is_err());
    }
}
