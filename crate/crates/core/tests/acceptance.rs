//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest harness so the
//! lines always print.

use std::process::ExitCode;

use bredon_core::expr::{ExprError, Violation};
use bredon_core::grading::{MotDegree, RO2Degree};
use bredon_core::motivic::bc2_dim;
use bredon_core::mutation::{with_mutation, Mutation};
use bredon_core::ring::{basis_at, parse, Element, RingId};
use bredon_core::verify::{
    verify_all, verify_crosschecks, verify_example_p1, verify_exactness, verify_figures,
    verify_realization, verify_ring_axioms, verify_vanishing, Report, Window,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn summaries(r: &Report, names: &[&str]) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for name in names {
        match r.summary(name) {
            Some(c) => {
                pass &= c.pass;
                parts.push(format!("{name}: {}", c.actual));
            }
            None => {
                pass = false;
                parts.push(format!("{name}: missing"));
            }
        }
    }
    Outcome {
        pass: pass && r.passed(),
        detail: parts.join("; "),
    }
}

fn all_of(outcomes: Vec<Outcome>) -> Outcome {
    Outcome {
        pass: outcomes.iter().all(|o| o.pass),
        detail: outcomes
            .into_iter()
            .map(|o| o.detail)
            .collect::<Vec<_>>()
            .join("; "),
    }
}

fn figure_one() -> Outcome {
    summaries(&verify_figures(&Window::default()), &["fig1.point"])
}

fn relations() -> Outcome {
    let m = |s: &str| parse(RingId::Motivic, s).expect("valid motivic expression");
    let xi_mu = m("xi").mul(&m("mu")).expect("same ring");
    let killed = m("theta/a")
        .mul(&m("xi"))
        .and_then(|y| y.mul(&m("mu")))
        .expect("same ring");
    Outcome {
        pass: xi_mu == m("u^2") && killed.is_zero(),
        detail: format!("xi*mu = {xi_mu}; (theta/a)*xi*mu = {killed}"),
    }
}

fn region_theorem() -> Outcome {
    summaries(
        &verify_figures(&Window::default()),
        &["fig5.regions", "fig3.bocal", "fig4.tildemot"],
    )
}

fn vanishing() -> Outcome {
    summaries(
        &verify_vanishing(&Window::default()),
        &["van", "1van", "crt2", "neq"],
    )
}

fn exactness() -> Outcome {
    summaries(
        &verify_exactness(&Window::default()),
        &[
            "top.composite",
            "top.middle",
            "top.four_term",
            "mot.composite",
            "mot.middle",
            "mot.four_term",
        ],
    )
}

fn cross_checks() -> Outcome {
    let w = Window::new(-6, 10, 0, 0, -6, 10, 0, 0).expect("valid window");
    let p1 = verify_example_p1();
    let at = |a| MotDegree::new(RO2Degree::new(a, 0), RO2Degree::new(1, 0));
    let (d11, d21) = (
        basis_at(RingId::TildeMot, at(1)).len(),
        basis_at(RingId::TildeMot, at(2)).len(),
    );
    all_of(vec![
        summaries(&verify_crosschecks(&w), &["crt1", "ec2mot_bc2"]),
        Outcome {
            pass: p1.passed() && d11 == 0 && d21 == 1 && bc2_dim(1, 1) == 1,
            detail: format!("dim(1,1) = {d11}, dim(2,1) = {d21}"),
        },
    ])
}

fn realization() -> Outcome {
    summaries(
        &verify_realization(&Window::default()),
        &[
            "ptiso",
            "point_cone",
            "tilde_block_image",
            "bocal_iso",
            "bocal_zero",
            "leqb",
        ],
    )
}

fn ring_axioms() -> Outcome {
    let mut names = Vec::new();
    for ring in ["pt", "ec2top", "motivic", "ec2mot", "bc2", "cfield", "topbc2"] {
        for law in ["commutativity", "associativity", "distributivity"] {
            names.push(format!("{ring}.{law}"));
        }
    }
    names.push("motivic.confluence".into());
    names.push("bc2.confluence".into());
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let r = verify_ring_axioms(1, 1000);
    let mut o = summaries(&r, &names);
    o.detail = format!("{} properties over 1000 trials each", names.len());
    o
}

const RINGS: [RingId; 13] = [
    RingId::Pt,
    RingId::Ec2Top,
    RingId::TildeTop,
    RingId::B(1),
    RingId::B(2),
    RingId::B(4),
    RingId::Motivic,
    RingId::Ec2Mot,
    RingId::TildeMot,
    RingId::Bc2,
    RingId::CField,
    RingId::TopBc2,
    RingId::B(3),
];

fn random_monomial(ring: RingId, rng: &mut ChaCha8Rng) -> Element {
    loop {
        let mut c: [i32; 4] = std::array::from_fn(|_| rng.gen_range(-8..=8));
        if matches!(ring, RingId::Bc2 | RingId::CField | RingId::TopBc2) {
            c[1] = 0;
            c[3] = 0;
        }
        let basis = basis_at(ring, MotDegree::from_ints(c[0], c[1], c[2], c[3]));
        if !basis.is_empty() {
            return basis[rng.gen_range(0..basis.len())].clone();
        }
    }
}

fn parser() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut round_trip_failures = 0;
    for ring in RINGS {
        for _ in 0..1000 {
            let mut x = random_monomial(ring, &mut rng);
            for _ in 0..rng.gen_range(0..4) {
                x = x.add(&random_monomial(ring, &mut rng)).expect("same ring");
            }
            if parse(ring, &x.canonical()).as_ref() != Ok(&x) {
                round_trip_failures += 1;
            }
        }
    }

    let syntax = parse(RingId::Pt, "a^");
    let block = parse(RingId::B(1), "theta*u^-3");
    let negative = parse(RingId::Pt, "a^-1");
    let torsion = parse(RingId::Motivic, "mu/tau_s");
    let rejections = [
        matches!(syntax, Err(ExprError::Syntax { pos: 2, .. })),
        matches!(&block, Err(e) if e.to_string().contains("n > 2i−1 in B_i")),
        matches!(
            &negative,
            Err(ExprError::Invalid { violation: Violation::NegativeWithoutTheta(_), .. })
        ),
        matches!(
            &torsion,
            Err(ExprError::Invalid { violation: Violation::TorsionNeedsTheta, .. })
        ),
    ];
    Outcome {
        pass: round_trip_failures == 0 && rejections.iter().all(|&ok| ok),
        detail: format!(
            "{round_trip_failures} round-trip failures over {} elements; rejections {:?}",
            RINGS.len() * 1000,
            rejections
        ),
    }
}

fn mutation_sensitivity() -> Outcome {
    let w = Window::default();
    let mut pass = true;
    let mut parts = Vec::new();
    for m in Mutation::ALL {
        let reports = with_mutation(m, || verify_all(&w, 1, 1000));
        let failing: Vec<String> = reports
            .iter()
            .flat_map(|r| r.summaries().filter(|c| !c.pass).map(|c| c.name.clone()))
            .collect();
        pass &= !failing.is_empty();
        parts.push(format!("{m}: {} failing properties", failing.len()));
    }
    let clean = verify_all(&w, 1, 1000).iter().all(Report::passed);
    Outcome {
        pass: pass && clean,
        detail: parts.join("; "),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("point ring chart", figure_one),
        ("relation check", relations),
        ("weight-plane regions", region_theorem),
        ("vanishing suites", vanishing),
        ("exactness", exactness),
        ("cross-checks", cross_checks),
        ("realization", realization),
        ("ring axioms", ring_axioms),
        ("parser", parser),
        ("mutation sensitivity", mutation_sensitivity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let mark = if o.pass { "PASS" } else { "FAIL" };
        println!("{mark} {:>2} {name}: {}", i + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
