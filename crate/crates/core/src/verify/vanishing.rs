use crate::motivic::{ec2mot_basis, mot_basis, tildemot_basis};

use super::{Report, Tally, Window};

/// Each vanishing statement is checked only where its hypothesis holds.
pub fn verify_vanishing(w: &Window) -> Report {
    let mut report = Report::new("vanishing");
    let mut van = Tally::new("van");
    let mut one_van = Tally::new("1van");
    let mut crt2 = Tally::new("crt2");
    let mut neq = Tally::new("neq");
    for d in w.bidegrees() {
        let loc = d.coords();
        let [a, p, b, q] = loc;
        if b < 0 && b + q < 0 {
            van.check(&loc, 0, mot_basis(d).len());
        }
        if a >= 2 * b + 2 && p >= 2 * q {
            one_van.check(&loc, 0, mot_basis(d).len());
        }
        if b <= 0 {
            crt2.check(&loc, 0, tildemot_basis(d).len());
        }
        if b + q < 0 {
            neq.check(&loc, 0, ec2mot_basis(d).len());
        }
    }
    for t in [van, one_van, crt2, neq] {
        t.record(&mut report);
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_window_passes() {
        let r = verify_vanishing(&Window::symmetric(3));
        assert!(r.passed());
        assert_eq!(r.summaries().count(), 4);
    }
}
