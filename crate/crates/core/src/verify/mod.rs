//! Windowed verification suites with machine-readable reports.
//!
//! Each property is scanned over a window and reported as one summary check (mismatch count)
//! followed by up to [`MAX_LISTED`] individual failures with their locations.

mod axioms;
mod exactness;
mod figures;
mod linalg;
mod realize;
mod vanishing;

use std::fmt::Debug;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grading::{MotDegree, RO2Degree};

pub use axioms::verify_ring_axioms;
pub use exactness::verify_exactness;
pub use figures::{fig1_pattern, verify_figures};
pub use realize::{verify_crosschecks, verify_example_p1, verify_realization};
pub use vanishing::verify_vanishing;

/// Failures listed individually per property; the summary check counts all of them.
pub const MAX_LISTED: usize = 10;

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_TRIALS: usize = 1000;

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 7] = [
    "figures",
    "vanishing",
    "exactness",
    "axioms",
    "realization",
    "example-p1",
    "crosschecks",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub a_min: i32,
    pub a_max: i32,
    pub p_min: i32,
    pub p_max: i32,
    pub b_min: i32,
    pub b_max: i32,
    pub q_min: i32,
    pub q_max: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("window axis {axis} is inverted ({min} > {max})")]
pub struct WindowError {
    pub axis: &'static str,
    pub min: i32,
    pub max: i32,
}

impl Window {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        a_min: i32,
        a_max: i32,
        p_min: i32,
        p_max: i32,
        b_min: i32,
        b_max: i32,
        q_min: i32,
        q_max: i32,
    ) -> Result<Window, WindowError> {
        for (axis, min, max) in [
            ("a", a_min, a_max),
            ("p", p_min, p_max),
            ("b", b_min, b_max),
            ("q", q_min, q_max),
        ] {
            if min > max {
                return Err(WindowError { axis, min, max });
            }
        }
        Ok(Window {
            a_min,
            a_max,
            p_min,
            p_max,
            b_min,
            b_max,
            q_min,
            q_max,
        })
    }

    /// [−n, n] on every axis.
    pub fn symmetric(n: u32) -> Window {
        let n = n as i32;
        Window::new(-n, n, -n, n, -n, n, -n, n).expect("symmetric windows are valid")
    }

    /// Topological degrees a+pσ in lexicographic order.
    pub fn degrees(&self) -> impl Iterator<Item = RO2Degree> + '_ {
        (self.a_min..=self.a_max)
            .flat_map(move |a| (self.p_min..=self.p_max).map(move |p| RO2Degree::new(a, p)))
    }

    /// Weights b+qσ in lexicographic order.
    pub fn weights(&self) -> impl Iterator<Item = RO2Degree> + '_ {
        (self.b_min..=self.b_max)
            .flat_map(move |b| (self.q_min..=self.q_max).map(move |q| RO2Degree::new(b, q)))
    }

    /// Every bidegree, weight-major.
    pub fn bidegrees(&self) -> impl Iterator<Item = MotDegree> + '_ {
        self.weights()
            .flat_map(move |w| self.degrees().map(move |d| MotDegree::new(d, w)))
    }
}

impl Default for Window {
    fn default() -> Self {
        Window::symmetric(8)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub location: Vec<i32>,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, location: Vec<i32>, expected: String, actual: String) -> Check {
        let pass = expected == actual;
        Check {
            name: name.to_owned(),
            location,
            expected,
            actual,
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str) -> Report {
        Report {
            suite: suite.to_owned(),
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Summary checks only (those without a location).
    pub fn summaries(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.location.is_empty())
    }

    pub fn summary(&self, name: &str) -> Option<&Check> {
        self.summaries().find(|c| c.name == name)
    }

    fn finish(mut self) -> Report {
        self.checks
            .sort_by(|x, y| x.location.cmp(&y.location).then(x.name.cmp(&y.name)));
        self
    }
}

/// Counts cases and mismatches of one property.
pub(crate) struct Tally {
    name: String,
    cases: usize,
    mismatches: usize,
    listed: Vec<Check>,
}

impl Tally {
    pub(crate) fn new(name: impl Into<String>) -> Tally {
        Tally {
            name: name.into(),
            cases: 0,
            mismatches: 0,
            listed: Vec::new(),
        }
    }

    pub(crate) fn check<T: PartialEq + Debug>(&mut self, location: &[i32], expected: T, actual: T) {
        self.cases += 1;
        if expected != actual {
            self.mismatches += 1;
            if self.listed.len() < MAX_LISTED {
                self.listed.push(Check::new(
                    &self.name,
                    location.to_vec(),
                    format!("{expected:?}"),
                    format!("{actual:?}"),
                ));
            }
        }
    }

    pub(crate) fn record(self, report: &mut Report) {
        report.checks.push(Check::new(
            &self.name,
            Vec::new(),
            format!("0 mismatches in {} cases", self.cases),
            format!("{} mismatches in {} cases", self.mismatches, self.cases),
        ));
        report.checks.extend(self.listed);
    }
}

/// Runs one suite by name.
pub fn run_suite(name: &str, w: &Window, seed: u64, trials: usize) -> Option<Report> {
    Some(match name {
        "figures" => verify_figures(w),
        "vanishing" => verify_vanishing(w),
        "exactness" => verify_exactness(w),
        "axioms" => verify_ring_axioms(seed, trials),
        "realization" => verify_realization(w),
        "example-p1" => verify_example_p1(),
        "crosschecks" => verify_crosschecks(w),
        _ => return None,
    })
}

/// Every suite, in the order of [`SUITES`].
pub fn verify_all(w: &Window, seed: u64, trials: usize) -> Vec<Report> {
    SUITES
        .iter()
        .map(|s| run_suite(s, w, seed, trials).expect("listed suites exist"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_validation() {
        assert!(Window::new(0, 1, 0, 1, 2, 1, 0, 0).is_err());
        let w = Window::symmetric(2);
        assert_eq!(w.degrees().count(), 25);
        assert_eq!(w.bidegrees().count(), 625);
        assert_eq!(Window::default(), Window::symmetric(8));
    }

    #[test]
    fn tally_lists_a_bounded_number_of_failures() {
        let mut t = Tally::new("demo");
        for i in 0..20 {
            t.check(&[i], 0, i % 2);
        }
        let mut r = Report::new("demo");
        t.record(&mut r);
        let r = r.finish();
        assert!(!r.passed());
        assert_eq!(r.checks.len(), 1 + MAX_LISTED);
        assert_eq!(r.checks[0].actual, "10 mismatches in 20 cases");
    }
}
