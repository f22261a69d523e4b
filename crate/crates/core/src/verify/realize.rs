use crate::f2::F2Sum;
use crate::grading::{classify_weight, MotDegree, RO2Degree, WeightRegion};
use crate::motivic::{
    bc2_basis, bc2_dim, bc2_to_ec2mot_mono, cfield_basis, cfield_to_mot_mono, ec2mot_basis,
    mot_basis, tildemot_basis,
};
use crate::point::{ec2top_basis, pt_basis, topbc2_basis, PtMono};
use crate::realization::{re_bc2_mono, re_ec2_mono, re_point_mono};
use crate::ring::{basis_at, RingId};

use super::figures::bijection;
use super::linalg::Matrix;
use super::{Report, Tally, Window};

fn some<T: Ord + Clone>(x: Option<T>) -> F2Sum<T> {
    x.into_iter().collect()
}

pub fn verify_realization(w: &Window) -> Report {
    let mut report = Report::new("realization");
    let mut ptiso = Tally::new("ptiso");
    let mut point_cone = Tally::new("point_cone");
    let mut block_image = Tally::new("tilde_block_image");
    let mut bocal_iso = Tally::new("bocal_iso");
    let mut bocal_zero = Tally::new("bocal_zero");
    let mut leqb = Tally::new("leqb");

    for d in w.degrees() {
        let source = mot_basis(MotDegree::topological(d));
        bijection(&mut ptiso, &[d.a, d.p], &source, &pt_basis(d), |x| {
            some(re_point_mono(x))
        });
    }

    for d in w.bidegrees() {
        let loc = d.coords();
        let [a, _, b, q] = loc;
        let source = mot_basis(d);
        match classify_weight(b, q) {
            WeightRegion::PointCone => {
                bijection(&mut point_cone, &loc, &source, &pt_basis(d.deg), |x| {
                    some(re_point_mono(x))
                });
            }
            WeightRegion::TildeBlock(i) => {
                let mut expected: Vec<PtMono> = pt_basis(d.deg)
                    .into_iter()
                    .filter(|x| matches!(x, PtMono::Neg { n, .. } if *n < 2 * i))
                    .collect();
                expected.sort();
                let mut image: Vec<PtMono> = source.iter().filter_map(re_point_mono).collect();
                image.sort();
                block_image.check(&loc, expected, image);
            }
            _ => {}
        }
        if b + q >= 0 {
            let source = ec2mot_basis(d);
            if a <= 2 * b {
                bijection(&mut bocal_iso, &loc, &source, &ec2top_basis(d.deg), |x| {
                    some(re_ec2_mono(x))
                });
            } else if a >= 2 * b + 2 {
                let nonzero = source.iter().filter_map(re_ec2_mono).count();
                bocal_zero.check(&loc, 0, nonzero);
            }
        }
    }

    for a in w.a_min..=w.a_max {
        for b in w.b_min..=w.b_max {
            if a <= 2 * b {
                bijection(
                    &mut leqb,
                    &[a, b],
                    &bc2_basis(a, b),
                    &topbc2_basis(a),
                    |x| F2Sum::from_mono(re_bc2_mono(x)),
                );
            }
        }
    }

    for t in [ptiso, point_cone, block_image, bocal_iso, bocal_zero, leqb] {
        t.record(&mut report);
    }
    report.finish()
}

/// The reduced groups H̃^{a,b}(BC₂): the unit class in (0, b) is removed.
fn reduced_bc2_dim(a: i32, b: i32) -> usize {
    bc2_dim(a, b) - usize::from(a == 0 && b >= 0)
}

/// Integer-bidegree comparisons between the ℂ-motivic groups and H^{*,*}(BC₂).
pub fn verify_crosschecks(w: &Window) -> Report {
    let mut report = Report::new("crosschecks");
    let mut crt1 = Tally::new("crt1");
    let mut ec2 = Tally::new("ec2mot_bc2");
    let mut bc2_map = Tally::new("bc2_to_ec2mot");
    let mut cfield = Tally::new("cfield_to_mot");
    for a in w.a_min..=w.a_max {
        for b in w.b_min..=w.b_max {
            let loc = [a, b];
            let d = MotDegree::from_ints(a, 0, b, 0);
            crt1.check(&loc, reduced_bc2_dim(a - 1, b), tildemot_basis(d).len());
            let target = ec2mot_basis(d);
            ec2.check(&loc, bc2_dim(a, b), target.len());
            bijection(&mut bc2_map, &loc, &bc2_basis(a, b), &target, |x| {
                F2Sum::from_mono(bc2_to_ec2mot_mono(x))
            });
            let source = cfield_basis(a, b);
            let rank = Matrix::of(&source, &mot_basis(d), |x| {
                F2Sum::from_mono(cfield_to_mot_mono(x))
            })
            .map(|m| m.rank());
            cfield.check(&loc, Ok(source.len()), rank);
        }
    }
    for t in [crt1, ec2, bc2_map, cfield] {
        t.record(&mut report);
    }
    report.finish()
}

/// The groups H̃^{1,1} and H̃^{2,1} of ẼC₂ that control the ℙ¹ example.
pub fn verify_example_p1() -> Report {
    let mut report = Report::new("example-p1");
    let at = |a| MotDegree::new(RO2Degree::new(a, 0), RO2Degree::new(1, 0));

    let mut t = Tally::new("p1.dim_1_1");
    t.check(&[1, 0, 1, 0], 0, tildemot_basis(at(1)).len());
    t.record(&mut report);

    let mut t = Tally::new("p1.basis_2_1");
    let basis: Vec<String> = basis_at(RingId::TildeMot, at(2))
        .iter()
        .map(|e| e.canonical())
        .collect();
    t.check(&[2, 0, 1, 0], vec!["theta*a^2*mu*tau_s".to_owned()], basis);
    t.record(&mut report);

    let mut t = Tally::new("p1.sum_nonzero");
    let total = tildemot_basis(at(1)).len() + tildemot_basis(at(2)).len();
    t.check(&[], true, total > 0);
    t.record(&mut report);

    let mut t = Tally::new("p1.crt1");
    t.check(&[1, 1], 1, reduced_bc2_dim(1, 1));
    t.check(&[2, 1], reduced_bc2_dim(1, 1), tildemot_basis(at(2)).len());
    t.record(&mut report);

    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_windows_pass() {
        for r in [
            verify_realization(&Window::symmetric(3)),
            verify_crosschecks(&Window::symmetric(3)),
            verify_example_p1(),
        ] {
            assert!(r.passed(), "{}: {:#?}", r.suite, r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn reduced_dimensions() {
        assert_eq!(reduced_bc2_dim(0, 0), 0);
        assert_eq!(reduced_bc2_dim(0, 3), 0);
        assert_eq!(reduced_bc2_dim(1, 1), 1);
        assert_eq!(reduced_bc2_dim(3, 1), 0);
    }
}
