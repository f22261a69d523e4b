use crate::f2::{F2Sum, Monomial};
use crate::grading::{classify_weight, Generator, MotDegree, WeightRegion};
use crate::motivic::{ec2mot_basis, mot_basis, tildemot_basis, Ec2MotMono};
use crate::point::{b_basis, b_mul_u2, ec2top_basis, pt_basis, tilde_basis, BElem, PtMono};

use super::linalg::Matrix;
use super::{Report, Tally, Window};

/// The two cones of M: dim 1 iff (a ≤ 0 and p ≥ −a) or (a ≥ 2 and p ≤ −a).
pub fn fig1_pattern(a: i32, p: i32) -> usize {
    usize::from((a <= 0 && p >= -a) || (a >= 2 && p <= -a))
}

fn ec2top_pattern(a: i32, p: i32) -> usize {
    usize::from(p + a >= 0)
}

fn block_pattern(index: i32, a: i32) -> usize {
    usize::from(index >= 1 && (2..=2 * index + 1).contains(&a))
}

/// Dimension predicted by the region of the weight.
fn region_pattern(d: MotDegree) -> usize {
    let (a, p, b) = (d.deg.a, d.deg.p, d.wt.a);
    match classify_weight(b, d.wt.p) {
        WeightRegion::PointCone => fig1_pattern(a, p),
        WeightRegion::TildeBlock(i) => block_pattern(i as i32, a),
        // the generator ξ^{−b} τ_σ^{b+q} sits in degree 2b − 2bσ
        WeightRegion::Ec2Cone => fig1_pattern(a - 2 * b, p + 2 * b),
        WeightRegion::Zero => 0,
    }
}

fn ec2mot_pattern(d: MotDegree) -> usize {
    let (a, p, b, q) = (d.deg.a, d.deg.p, d.wt.a, d.wt.p);
    if b + q < 0 {
        0
    } else {
        fig1_pattern(a - 2 * b, p + 2 * b)
    }
}

/// Three-case description of the EC₂ motivic groups against the topological ones.
fn bocal_pattern(d: MotDegree) -> usize {
    let (a, p, b, q) = (d.deg.a, d.deg.p, d.wt.a, d.wt.p);
    if b + q < 0 {
        0
    } else if a <= 2 * b {
        ec2top_pattern(a, p)
    } else if a == 2 * b + 1 {
        0
    } else {
        fig1_pattern(a + 2 * q, p - 2 * q)
    }
}

/// Records (rank, |target|) against (|source|, |source|).
pub(super) fn bijection<S, T, F>(t: &mut Tally, loc: &[i32], source: &[S], target: &[T], f: F)
where
    T: Ord + Clone + std::fmt::Debug,
    F: FnMut(&S) -> F2Sum<T>,
{
    let n = source.len();
    let actual = Matrix::of(source, target, f).map(|m| (m.rank(), target.len()));
    t.check(loc, Ok((n, n)), actual);
}

fn ec2mot_times(gen: Ec2MotMono) -> impl Fn(&Ec2MotMono) -> F2Sum<Ec2MotMono> {
    move |x| x.mul(&gen).into_iter().collect()
}

pub fn verify_figures(w: &Window) -> Report {
    let mut report = Report::new("figures");

    let mut fig1 = Tally::new("fig1.point");
    let mut ec2top = Tally::new("fig2.ec2top");
    let mut tilde = Tally::new("fig2.tildetop");
    let mut block = Tally::new("fig2.block");
    let mut kernel = Tally::new("fig2.u2_kernel");
    let top_blocks = 1..=w.b_max.max(3) as u32;
    let u2 = 2 * Generator::U.degree().deg;
    for d in w.degrees() {
        let (a, p) = (d.a, d.p);
        fig1.check(&[a, p], fig1_pattern(a, p), pt_basis(d).len());
        ec2top.check(&[a, p], ec2top_pattern(a, p), ec2top_basis(d).len());
        tilde.check(&[a, p], usize::from(a >= 2), tilde_basis(d).len());
        for m in top_blocks.clone() {
            let loc = [m as i32, a, p];
            let source = b_basis(m, d);
            block.check(&loc, block_pattern(m as i32, a), source.len());
            let target = b_basis(m - 1, d + u2);
            let nullity = Matrix::of(&source, &target, |t| {
                let x = BElem::new(m, F2Sum::from_mono(*t)).expect("basis monomial");
                b_mul_u2(&x).terms().clone()
            })
            .map(|mat| mat.nullity());
            kernel.check(&loc, Ok(usize::from((2..=3).contains(&a))), nullity);
        }
    }
    for t in [fig1, ec2top, tilde, block, kernel] {
        t.record(&mut report);
    }

    let mut ec2mot = Tally::new("fig3.ec2mot");
    let mut bocal = Tally::new("fig3.bocal");
    let mut tau_s = Tally::new("fig3.tau_s_periodicity");
    let mut xi = Tally::new("fig3.xi_periodicity");
    let mut tildemot = Tally::new("fig4.tildemot");
    let mut regions = Tally::new("fig5.regions");
    let tau_s_gen = Ec2MotMono {
        x: PtMono::ONE,
        e: 0,
        f: 1,
    };
    let xi_gen = Ec2MotMono {
        x: PtMono::ONE,
        e: 1,
        f: 0,
    };
    for d in w.bidegrees() {
        let loc = d.coords();
        let basis = ec2mot_basis(d);
        ec2mot.check(&loc, ec2mot_pattern(d), basis.len());
        bocal.check(&loc, bocal_pattern(d), basis.len());
        if d.wt.a + d.wt.p >= 0 {
            let target = ec2mot_basis(d + Generator::TauSigma.degree());
            bijection(&mut tau_s, &loc, &basis, &target, ec2mot_times(tau_s_gen));
        }
        let target = ec2mot_basis(d + Generator::Xi.degree());
        bijection(&mut xi, &loc, &basis, &target, ec2mot_times(xi_gen));

        let b = d.wt.a;
        tildemot.check(&loc, block_pattern(b, d.deg.a), tildemot_basis(d).len());
        regions.check(&loc, region_pattern(d), mot_basis(d).len());
    }
    for t in [ec2mot, bocal, tau_s, xi, tildemot, regions] {
        t.record(&mut report);
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_one_samples() {
        assert_eq!(fig1_pattern(0, 0), 1);
        assert_eq!(fig1_pattern(1, -1), 0);
        assert_eq!(fig1_pattern(2, -2), 1);
        assert_eq!(fig1_pattern(2, -1), 0);
        assert_eq!(fig1_pattern(-3, 3), 1);
        assert_eq!(fig1_pattern(-3, 2), 0);
    }

    #[test]
    fn patterns_agree_where_both_apply() {
        for a in -8..=8 {
            for p in -8..=8 {
                for b in -8..=8 {
                    for q in -8..=8 {
                        let d = MotDegree::from_ints(a, p, b, q);
                        assert_eq!(ec2mot_pattern(d), bocal_pattern(d), "{d}");
                        if b < 0 {
                            assert_eq!(region_pattern(d), ec2mot_pattern(d), "{d}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn small_window_passes() {
        let r = verify_figures(&Window::symmetric(3));
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
    }
}
