//! The isotropy sequences ẼC₂ → pt → EC₂, topological and motivic.
//!
//! At each degree the sequence H̃(ẼC₂) → H(pt) → H(EC₂) is checked for g∘f = 0 and
//! rank f = nullity g. The connecting map is never computed; instead coker g at d is compared
//! with ker f at d + 1.

use std::fmt::Debug;

use crate::f2::F2Sum;
use crate::grading::{MotDegree, RO2Degree};
use crate::motivic::{
    ec2mot_basis, mot_basis, restrict_to_ec2, tilde_to_mot, tildemot_basis,
};
use crate::point::{ec2top_basis, localize, pt_basis, tilde_basis, tilde_to_pt};

use super::linalg::{composite_vanishes, Matrix};
use super::{Report, Tally, Window};

struct Sequence<'a, S: Ord, M: Ord, T: Ord> {
    source: &'a dyn Fn(MotDegree) -> Vec<S>,
    middle: &'a dyn Fn(MotDegree) -> Vec<M>,
    target: &'a dyn Fn(MotDegree) -> Vec<T>,
    f: &'a dyn Fn(&F2Sum<S>) -> F2Sum<M>,
    g: &'a dyn Fn(&F2Sum<M>) -> F2Sum<T>,
}

struct Ranks {
    source: usize,
    middle: usize,
    target: usize,
    f: usize,
    g: usize,
}

impl<S, M, T> Sequence<'_, S, M, T>
where
    S: Ord + Clone,
    M: Ord + Clone + Debug,
    T: Ord + Clone + Debug,
{
    fn ranks(&self, d: MotDegree) -> Result<Ranks, String> {
        let (s, m, t) = ((self.source)(d), (self.middle)(d), (self.target)(d));
        let f = Matrix::of(&s, &m, |x| (self.f)(&F2Sum::from_mono(x.clone())))?;
        let g = Matrix::of(&m, &t, |x| (self.g)(&F2Sum::from_mono(x.clone())))?;
        Ok(Ranks {
            source: s.len(),
            middle: m.len(),
            target: t.len(),
            f: f.rank(),
            g: g.rank(),
        })
    }

    fn composite_vanishes(&self, d: MotDegree) -> bool {
        composite_vanishes(
            &(self.source)(d),
            |x| (self.f)(&F2Sum::from_mono(x.clone())),
            |y| (self.g)(y),
        )
    }

    fn scan(&self, prefix: &str, degrees: impl Iterator<Item = MotDegree>, report: &mut Report) {
        let mut composite = Tally::new(format!("{prefix}.composite"));
        let mut middle = Tally::new(format!("{prefix}.middle"));
        let mut four_term = Tally::new(format!("{prefix}.four_term"));
        let shift = MotDegree::topological(RO2Degree::ONE);
        for d in degrees {
            let loc = d.coords();
            composite.check(&loc, true, self.composite_vanishes(d));
            let here = self.ranks(d);
            middle.check(
                &loc,
                here.as_ref().map(|r| r.middle - r.g).map_err(Clone::clone),
                here.as_ref().map(|r| r.f).map_err(Clone::clone),
            );
            let next = self.ranks(d + shift);
            four_term.check(
                &loc,
                here.map(|r| r.target - r.g),
                next.map(|r| r.source - r.f),
            );
        }
        for t in [composite, middle, four_term] {
            t.record(report);
        }
    }
}

pub fn verify_exactness(w: &Window) -> Report {
    let mut report = Report::new("exactness");

    let top = Sequence {
        source: &|d: MotDegree| tilde_basis(d.deg),
        middle: &|d: MotDegree| pt_basis(d.deg),
        target: &|d: MotDegree| ec2top_basis(d.deg),
        f: &tilde_to_pt,
        g: &localize,
    };
    top.scan("top", w.degrees().map(MotDegree::topological), &mut report);

    let mot = Sequence {
        source: &tildemot_basis,
        middle: &mot_basis,
        target: &ec2mot_basis,
        f: &tilde_to_mot,
        g: &restrict_to_ec2,
    };
    mot.scan("mot", w.bidegrees(), &mut report);

    report.finish()
}
