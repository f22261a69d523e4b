//! Formal Laurent monomials in every atom the parser knows about.

use std::fmt;
use std::str::FromStr;

use crate::f2::{F2Sum, Monomial};
use crate::grading::{Generator, MotDegree};

/// Atoms in canonical print order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Theta,
    A,
    U,
    Xi,
    Mu,
    TauS,
    Tau,
    E1,
    E2,
    X,
}

impl Atom {
    pub const ALL: [Atom; 10] = [
        Atom::Theta,
        Atom::A,
        Atom::U,
        Atom::Xi,
        Atom::Mu,
        Atom::TauS,
        Atom::Tau,
        Atom::E1,
        Atom::E2,
        Atom::X,
    ];

    pub fn name(self) -> &'static str {
        match self.generator() {
            Some(g) => g.ascii_name(),
            None => "x",
        }
    }

    /// `None` for `x`, the generator of H*(BC₂; F₂).
    pub fn generator(self) -> Option<Generator> {
        Some(match self {
            Atom::Theta => Generator::Theta,
            Atom::A => Generator::A,
            Atom::U => Generator::U,
            Atom::Xi => Generator::Xi,
            Atom::Mu => Generator::Mu,
            Atom::TauS => Generator::TauSigma,
            Atom::Tau => Generator::Tau,
            Atom::E1 => Generator::E1,
            Atom::E2 => Generator::E2,
            Atom::X => return None,
        })
    }

    pub fn degree(self) -> MotDegree {
        match self.generator() {
            Some(g) => g.degree(),
            None => MotDegree::from_ints(1, 0, 0, 0),
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Atom {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        if s == "x" {
            return Ok(Atom::X);
        }
        let g: Generator = s.parse().map_err(|_| ())?;
        Ok(match g {
            Generator::Theta => Atom::Theta,
            Generator::A => Atom::A,
            Generator::U => Atom::U,
            Generator::Xi => Atom::Xi,
            Generator::Mu => Atom::Mu,
            Generator::TauSigma => Atom::TauS,
            Generator::Tau => Atom::Tau,
            Generator::E1 => Atom::E1,
            Generator::E2 => Atom::E2,
        })
    }
}

/// An exponent vector indexed by [`Atom`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RawMono([i32; 10]);

impl RawMono {
    pub fn one() -> Self {
        RawMono([0; 10])
    }

    pub fn atom(a: Atom) -> Self {
        RawMono::one().with(a, 1)
    }

    pub fn from_pairs(pairs: &[(Atom, i32)]) -> Self {
        pairs
            .iter()
            .fold(RawMono::one(), |m, &(a, k)| m.with(a, m.get(a) + k))
    }

    pub fn get(&self, a: Atom) -> i32 {
        self.0[a.index()]
    }

    pub fn with(mut self, a: Atom, k: i32) -> Self {
        self.0[a.index()] = k;
        self
    }

    pub fn times(&self, other: &RawMono) -> RawMono {
        let mut out = *self;
        for (x, y) in out.0.iter_mut().zip(other.0) {
            *x += y;
        }
        out
    }

    pub fn inverse(&self) -> RawMono {
        RawMono(self.0.map(|k| -k))
    }

    pub fn pow(&self, k: i32) -> RawMono {
        RawMono(self.0.map(|e| e * k))
    }

    /// Atoms with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = (Atom, i32)> + '_ {
        Atom::ALL
            .into_iter()
            .map(|a| (a, self.get(a)))
            .filter(|&(_, k)| k != 0)
    }

    /// Sum of generator degrees weighted by exponents.
    pub fn degree(&self) -> MotDegree {
        self.support()
            .fold(MotDegree::ZERO, |d, (a, k)| d + k * a.degree())
    }
}

impl Monomial for RawMono {
    fn one() -> Self {
        RawMono::one()
    }

    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self.times(other))
    }
}

impl fmt::Display for RawMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn power(a: Atom, k: i32) -> String {
            if k == 1 {
                a.name().to_owned()
            } else {
                format!("{}^{}", a.name(), k)
            }
        }
        let num: Vec<String> = self
            .support()
            .filter(|&(_, k)| k > 0)
            .map(|(a, k)| power(a, k))
            .collect();
        let den: Vec<String> = self
            .support()
            .filter(|&(_, k)| k < 0)
            .map(|(a, k)| power(a, -k))
            .collect();
        if num.is_empty() {
            f.write_str("1")?;
        } else {
            f.write_str(&num.join("*"))?;
        }
        match den.len() {
            0 => Ok(()),
            1 => write!(f, "/{}", den[0]),
            _ => write!(f, "/({})", den.join("*")),
        }
    }
}

pub type RawSum = F2Sum<RawMono>;

pub(crate) fn pow_sum(x: &RawSum, k: u32) -> RawSum {
    (0..k).fold(RawSum::one(), |acc, _| &acc * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printing() {
        let m = RawMono::from_pairs(&[(Atom::Theta, 1), (Atom::A, -2), (Atom::U, -1)]);
        assert_eq!(m.to_string(), "theta/(a^2*u)");
        let m = RawMono::from_pairs(&[(Atom::Theta, 1), (Atom::Mu, 1), (Atom::TauS, -1)]);
        assert_eq!(m.to_string(), "theta*mu/tau_s");
        assert_eq!(RawMono::from_pairs(&[(Atom::U, -3)]).to_string(), "1/u^3");
        assert_eq!(RawMono::one().to_string(), "1");
    }

    #[test]
    fn atom_names_round_trip() {
        for a in Atom::ALL {
            assert_eq!(a.name().parse::<Atom>(), Ok(a));
        }
    }
}
