use std::fmt::Debug;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::f2::{F2Sum, Monomial};
use crate::grading::MotDegree;
use crate::motivic::{
    tilde_to_mot_mono, tildemot_act_mono, Bc2Mono, CFieldMono, Ec2MotMono, FreeMono, MotMono,
    TildeMotMono, TorMono,
};
use crate::point::{
    act_on_tilde_mono, tilde_to_pt_mono, Ec2TopMono, PtMono, TildeTopMono, TopBc2Mono,
};

use super::{Report, Tally};

type Rand = ChaCha8Rng;

fn pt_mono(rng: &mut Rand) -> PtMono {
    let (m, n) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
    if rng.gen_bool(0.5) {
        PtMono::Pos { m, n }
    } else {
        PtMono::Neg { m, n }
    }
}

fn free_mono(rng: &mut Rand) -> FreeMono {
    loop {
        let x = pt_mono(rng);
        let (e, f, g) = (
            rng.gen_range(0..=6),
            rng.gen_range(0..=6),
            rng.gen_range(0..=6),
        );
        if let Some(m) = FreeMono::reduce(x, e, f, g) {
            return m;
        }
    }
}

fn tor_mono(rng: &mut Rand) -> TorMono {
    let i = rng.gen_range(1..=4);
    TorMono::new(
        i,
        rng.gen_range(1..=6),
        rng.gen_range(-6..=6),
        rng.gen_range(0..2 * i),
    )
    .expect("indices in range")
}

fn mot_mono(rng: &mut Rand) -> MotMono {
    if rng.gen_bool(0.4) {
        MotMono::Tor(tor_mono(rng))
    } else {
        MotMono::Free(free_mono(rng))
    }
}

fn tildetop_mono(rng: &mut Rand) -> TildeTopMono {
    TildeTopMono {
        m: rng.gen_range(-6..=6),
        n: rng.gen_range(0..=8),
    }
}

fn tildemot_mono(rng: &mut Rand) -> TildeMotMono {
    let i = rng.gen_range(1..=4);
    TildeMotMono::new(
        i,
        rng.gen_range(-6..=6),
        rng.gen_range(-6..=6),
        rng.gen_range(0..2 * i),
    )
    .expect("indices in range")
}

fn ring_laws<M, G, D>(ring: &str, rng: &mut Rand, trials: usize, mut gen: G, degree: D, report: &mut Report)
where
    M: Monomial + Debug,
    G: FnMut(&mut Rand) -> M,
    D: Fn(&M) -> MotDegree,
{
    let mut comm = Tally::new(format!("{ring}.commutativity"));
    let mut assoc = Tally::new(format!("{ring}.associativity"));
    let mut dist = Tally::new(format!("{ring}.distributivity"));
    let mut unit = Tally::new(format!("{ring}.unit"));
    let mut degrees = Tally::new(format!("{ring}.degree_additivity"));
    for trial in 0..trials {
        let loc = [trial as i32];
        let (x, y, z) = (gen(rng), gen(rng), gen(rng));
        let (sx, sy, sz) = (
            F2Sum::from_mono(x.clone()),
            F2Sum::from_mono(y.clone()),
            F2Sum::from_mono(z.clone()),
        );
        comm.check(&loc, x.mul(&y), y.mul(&x));
        assoc.check(&loc, &(&sx * &sy) * &sz, &sx * &(&sy * &sz));
        dist.check(&loc, &sx * &(&sy + &sz), &(&sx * &sy) + &(&sx * &sz));
        unit.check(&loc, Some(x.clone()), x.mul(&M::one()));
        if let Some(p) = x.mul(&y) {
            degrees.check(&loc, degree(&x) + degree(&y), degree(&p));
        }
    }
    for t in [comm, assoc, dist, unit, degrees] {
        t.record(report);
    }
}

/// Multiplies `factors` in a random order.
fn shuffled_product<M: Monomial>(rng: &mut Rand, mut factors: Vec<M>) -> Option<M> {
    factors.shuffle(rng);
    factors
        .iter()
        .try_fold(M::one(), |acc, f| acc.mul(f))
}

fn confluence(rng: &mut Rand, trials: usize, report: &mut Report) {
    let xi = MotMono::Free(FreeMono::reduce(PtMono::ONE, 1, 0, 0).expect("ξ"));
    let tau_s = MotMono::Free(FreeMono::reduce(PtMono::ONE, 0, 1, 0).expect("τ_σ"));
    let mu = MotMono::Free(FreeMono::reduce(PtMono::ONE, 0, 0, 1).expect("μ"));
    let mut t = Tally::new("motivic.confluence");
    for trial in 0..trials {
        let x = pt_mono(rng);
        let (e, f, g) = (
            rng.gen_range(1..=6),
            rng.gen_range(0..=6),
            rng.gen_range(1..=6),
        );
        let mut factors = vec![MotMono::Free(FreeMono::from_point(x))];
        factors.extend(std::iter::repeat_n(xi, e as usize));
        factors.extend(std::iter::repeat_n(tau_s, f as usize));
        factors.extend(std::iter::repeat_n(mu, g as usize));
        t.check(
            &[trial as i32],
            FreeMono::reduce(x, e, f, g).map(MotMono::Free),
            shuffled_product(rng, factors),
        );
    }
    t.record(report);

    let tau = Bc2Mono::reduce(1, 0, 0);
    let e1 = Bc2Mono::reduce(0, 1, 0);
    let e2 = Bc2Mono::reduce(0, 0, 1);
    let mut t = Tally::new("bc2.confluence");
    for trial in 0..trials {
        let (k, a, l) = (
            rng.gen_range(0..=6),
            rng.gen_range(2..=8),
            rng.gen_range(0..=6),
        );
        let mut factors = vec![tau; k as usize];
        factors.extend(std::iter::repeat_n(e1, a as usize));
        factors.extend(std::iter::repeat_n(e2, l as usize));
        t.check(
            &[trial as i32],
            Some(Bc2Mono::reduce(k, a, l)),
            shuffled_product(rng, factors),
        );
    }
    t.record(report);
}

fn modules(rng: &mut Rand, trials: usize, report: &mut Report) {
    let mut assoc = Tally::new("tildetop.associativity");
    let mut linear = Tally::new("tildetop.linearity");
    for trial in 0..trials {
        let loc = [trial as i32];
        let (x, y, t) = (pt_mono(rng), pt_mono(rng), tildetop_mono(rng));
        let lhs = x.mul(&y).and_then(|xy| act_on_tilde_mono(&xy, &t));
        let rhs = act_on_tilde_mono(&y, &t).and_then(|yt| act_on_tilde_mono(&x, &yt));
        assoc.check(&loc, lhs, rhs);
        linear.check(
            &loc,
            act_on_tilde_mono(&x, &t).and_then(|xt| tilde_to_pt_mono(&xt)),
            tilde_to_pt_mono(&t).and_then(|it| x.mul(&it)),
        );
    }
    assoc.record(report);
    linear.record(report);

    let mut assoc = Tally::new("tildemot.associativity");
    let mut linear = Tally::new("tildemot.linearity");
    for trial in 0..trials {
        let loc = [trial as i32];
        let (x, y, t) = (free_mono(rng), free_mono(rng), tildemot_mono(rng));
        let lhs = match MotMono::Free(x).mul(&MotMono::Free(y)) {
            Some(MotMono::Free(xy)) => tildemot_act_mono(&xy, &t),
            _ => None,
        };
        let rhs = tildemot_act_mono(&y, &t).and_then(|yt| tildemot_act_mono(&x, &yt));
        assoc.check(&loc, lhs, rhs);
        linear.check(
            &loc,
            tildemot_act_mono(&x, &t).and_then(|xt| tilde_to_mot_mono(&xt)),
            tilde_to_mot_mono(&t).and_then(|it| MotMono::Free(x).mul(&it)),
        );
    }
    assoc.record(report);
    linear.record(report);
}

fn relations(report: &mut Report) {
    let free = |x: PtMono, e, f, g| FreeMono::reduce(x, e, f, g).map(MotMono::Free);
    let xi = free(PtMono::ONE, 1, 0, 0).expect("ξ");
    let mu = free(PtMono::ONE, 0, 0, 1).expect("μ");
    let u2 = free(PtMono::Pos { m: 0, n: 2 }, 0, 0, 0);
    let theta_over_a = free(PtMono::Neg { m: 1, n: 0 }, 0, 0, 0).expect("θ/a");
    let mut t = Tally::new("motivic.relations");
    t.check(&[0], u2, xi.mul(&mu));
    t.check(
        &[1],
        None,
        theta_over_a.mul(&xi).and_then(|y| y.mul(&mu)),
    );
    t.record(report);
}

/// Randomized ring and module axioms, deterministic in `seed`.
pub fn verify_ring_axioms(seed: u64, trials: usize) -> Report {
    let mut rng = Rand::seed_from_u64(seed);
    let mut report = Report::new("axioms");
    let r = &mut report;
    let top = |d| MotDegree::topological(d);
    ring_laws("pt", &mut rng, trials, pt_mono, |x| top(x.degree()), r);
    ring_laws(
        "ec2top",
        &mut rng,
        trials,
        |g| Ec2TopMono {
            m: g.gen_range(0..=6),
            n: g.gen_range(-6..=6),
        },
        |x| top(x.degree()),
        r,
    );
    ring_laws("motivic", &mut rng, trials, mot_mono, MotMono::degree, r);
    ring_laws(
        "ec2mot",
        &mut rng,
        trials,
        |g| Ec2MotMono {
            x: pt_mono(g),
            e: g.gen_range(-6..=6),
            f: g.gen_range(0..=6),
        },
        Ec2MotMono::degree,
        r,
    );
    ring_laws(
        "bc2",
        &mut rng,
        trials,
        |g| Bc2Mono::reduce(g.gen_range(0..=6), g.gen_range(0..=1), g.gen_range(0..=6)),
        Bc2Mono::degree,
        r,
    );
    ring_laws(
        "cfield",
        &mut rng,
        trials,
        |g| CFieldMono {
            k: g.gen_range(0..=6),
        },
        |x| MotDegree::from_ints(0, 0, x.k as i32, 0),
        r,
    );
    ring_laws(
        "topbc2",
        &mut rng,
        trials,
        |g| TopBc2Mono {
            k: g.gen_range(0..=6),
        },
        |x| MotDegree::from_ints(x.k as i32, 0, 0, 0),
        r,
    );
    confluence(&mut rng, trials, r);
    modules(&mut rng, trials, r);
    relations(r);
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mutation::{with_mutation, Mutation};

    #[test]
    fn passes_and_is_deterministic() {
        let r = verify_ring_axioms(7, 200);
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r, verify_ring_axioms(7, 200));
    }

    #[test]
    fn torsion_products_are_detected() {
        let r = with_mutation(Mutation::TorsionProducts, || verify_ring_axioms(1, 200));
        assert!(r.failures().any(|c| c.name == "motivic.commutativity"));
    }
}
