//! Degrees a+pσ, motivic bidegrees (a+pσ, b+qσ), the generator degree table and the
//! weight-plane regions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// An RO(C₂) degree `a + pσ`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct RO2Degree {
    /// Multiplicity of the trivial representation.
    pub a: i32,
    /// Multiplicity of the sign representation σ.
    pub p: i32,
}

impl RO2Degree {
    pub const ZERO: RO2Degree = RO2Degree::new(0, 0);
    pub const ONE: RO2Degree = RO2Degree::new(1, 0);
    pub const SIGMA: RO2Degree = RO2Degree::new(0, 1);

    pub const fn new(a: i32, p: i32) -> Self {
        Self { a, p }
    }
}

impl Add for RO2Degree {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.p + rhs.p)
    }
}

impl Sub for RO2Degree {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.p - rhs.p)
    }
}

impl Neg for RO2Degree {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.a, -self.p)
    }
}

impl Mul<RO2Degree> for i32 {
    type Output = RO2Degree;

    fn mul(self, rhs: RO2Degree) -> RO2Degree {
        RO2Degree::new(self * rhs.a, self * rhs.p)
    }
}

impl fmt::Display for RO2Degree {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{}{:+}σ", self.a, self.p)
    }
}

/// A motivic bidegree: cohomological degree and weight.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct MotDegree {
    pub deg: RO2Degree,
    pub wt: RO2Degree,
}

impl MotDegree {
    pub const ZERO: MotDegree = MotDegree::new(RO2Degree::ZERO, RO2Degree::ZERO);

    pub const fn new(deg: RO2Degree, wt: RO2Degree) -> Self {
        Self { deg, wt }
    }

    pub const fn from_ints(a: i32, p: i32, b: i32, q: i32) -> Self {
        Self::new(RO2Degree::new(a, p), RO2Degree::new(b, q))
    }

    /// A topological degree, placed in weight zero.
    pub const fn topological(deg: RO2Degree) -> Self {
        Self::new(deg, RO2Degree::ZERO)
    }

    /// The coordinates `[a, p, b, q]`.
    pub fn coords(&self) -> [i32; 4] {
        [self.deg.a, self.deg.p, self.wt.a, self.wt.p]
    }
}

impl Add for MotDegree {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.deg + rhs.deg, self.wt + rhs.wt)
    }
}

impl Sub for MotDegree {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.deg - rhs.deg, self.wt - rhs.wt)
    }
}

impl Neg for MotDegree {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.deg, -self.wt)
    }
}

impl Mul<MotDegree> for i32 {
    type Output = MotDegree;

    fn mul(self, rhs: MotDegree) -> MotDegree {
        MotDegree::new(self * rhs.deg, self * rhs.wt)
    }
}

impl fmt::Display for MotDegree {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "({}, {})", self.deg, self.wt)
    }
}

pub fn degree_add(x: MotDegree, y: MotDegree) -> MotDegree {
    x + y
}

/// The named generators appearing in the rings of this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    U,
    Theta,
    Xi,
    TauSigma,
    Mu,
    Tau,
    E1,
    E2,
}

impl Generator {
    pub const ALL: [Generator; 9] = [
        Generator::A,
        Generator::U,
        Generator::Theta,
        Generator::Xi,
        Generator::TauSigma,
        Generator::Mu,
        Generator::Tau,
        Generator::E1,
        Generator::E2,
    ];

    pub const fn degree(self) -> MotDegree {
        use Generator::*;
        match self {
            A => MotDegree::from_ints(0, 1, 0, 0),
            U => MotDegree::from_ints(-1, 1, 0, 0),
            Theta => MotDegree::from_ints(2, -2, 0, 0),
            Xi => MotDegree::from_ints(-2, 2, -1, 1),
            TauSigma => MotDegree::from_ints(0, 0, 0, 1),
            Mu => MotDegree::from_ints(0, 0, 1, -1),
            Tau => MotDegree::from_ints(0, 0, 1, 0),
            E1 => MotDegree::from_ints(1, 0, 1, 0),
            E2 => MotDegree::from_ints(2, 0, 1, 0),
        }
    }

    pub const fn ascii_name(self) -> &'static str {
        use Generator::*;
        match self {
            A => "a",
            U => "u",
            Theta => "theta",
            Xi => "xi",
            TauSigma => "tau_s",
            Mu => "mu",
            Tau => "tau",
            E1 => "e1",
            E2 => "e2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown generator '{0}'")]
pub struct UnknownGenerator(pub String);

impl FromStr for Generator {
    type Err = UnknownGenerator;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use Generator::*;
        Ok(match s {
            "a" => A,
            "u" => U,
            "theta" | "θ" => Theta,
            "xi" | "ξ" => Xi,
            "tau_s" | "τ_σ" | "τσ" => TauSigma,
            "mu" | "μ" => Mu,
            "tau" | "τ" => Tau,
            "e1" | "e₁" => E1,
            "e2" | "e₂" => E2,
            _ => return Err(UnknownGenerator(s.to_owned())),
        })
    }
}

pub fn generator_degree(symbol: &str) -> Result<MotDegree, UnknownGenerator> {
    symbol.parse::<Generator>().map(Generator::degree)
}

/// The four regions of the weight plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightRegion {
    /// b ≥ 0 and b+q ≥ 0: Betti realization is an isomorphism onto the point ring.
    PointCone,
    /// b ≥ 1 and b+q < 0: the block B_b from ẼC₂. The index is b.
    TildeBlock(u32),
    /// b < 0 and b+q ≥ 0: agrees with EC₂.
    Ec2Cone,
    Zero,
}

impl WeightRegion {
    /// Letter used in weight-plane charts.
    pub fn label(&self) -> String {
        match self {
            WeightRegion::PointCone => "M".to_owned(),
            WeightRegion::TildeBlock(i) => format!("B{i}"),
            WeightRegion::Ec2Cone => "E".to_owned(),
            WeightRegion::Zero => "0".to_owned(),
        }
    }
}

pub fn classify_weight(b: i32, q: i32) -> WeightRegion {
    match (b >= 0, b + q >= 0) {
        (true, true) => WeightRegion::PointCone,
        (true, false) if b >= 1 => WeightRegion::TildeBlock(b as u32),
        (false, true) => WeightRegion::Ec2Cone,
        _ => WeightRegion::Zero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(a: i32, p: i32, b: i32, q: i32) -> MotDegree {
        MotDegree::from_ints(a, p, b, q)
    }

    #[test]
    fn identity() {
        let x = d(3, -2, 1, 5);
        assert_eq!(degree_add(MotDegree::ZERO, x), x);
    }

    #[test]
    fn xi_times_mu_has_degree_of_u_squared() {
        let sum = Generator::Xi.degree() + Generator::Mu.degree();
        assert_eq!(sum, d(-2, 2, 0, 0));
        assert_eq!(sum, 2 * Generator::U.degree());
    }

    #[test]
    fn tau_is_mu_tau_sigma() {
        assert_eq!(
            Generator::TauSigma.degree() + Generator::Mu.degree(),
            Generator::Tau.degree()
        );
    }

    #[test]
    fn generator_table() {
        assert_eq!(generator_degree("tau_s"), Ok(d(0, 0, 0, 1)));
        assert_eq!(generator_degree("theta"), Ok(d(2, -2, 0, 0)));
        assert_eq!(generator_degree("e1"), Ok(d(1, 0, 1, 0)));
        assert_eq!(generator_degree("e2"), Ok(d(2, 0, 1, 0)));
        assert_eq!(generator_degree("ξ"), Ok(d(-2, 2, -1, 1)));
        assert_eq!(
            generator_degree("rho"),
            Err(UnknownGenerator("rho".to_owned()))
        );
        for g in Generator::ALL {
            assert_eq!(g.ascii_name().parse::<Generator>(), Ok(g));
        }
    }

    #[test]
    fn bc2_generators_in_terms_of_ec2_generators() {
        // e1 = a u tau_s / xi, e2 = a^2 tau_s / xi, tau = u^2 tau_s / xi
        use Generator::*;
        let over_xi = TauSigma.degree() - Xi.degree();
        assert_eq!(A.degree() + U.degree() + over_xi, E1.degree());
        assert_eq!(2 * A.degree() + over_xi, E2.degree());
        assert_eq!(2 * U.degree() + over_xi, Tau.degree());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_weight(0, 0), WeightRegion::PointCone);
        assert_eq!(classify_weight(2, -3), WeightRegion::TildeBlock(2));
        assert_eq!(classify_weight(-1, -1), WeightRegion::Zero);
        assert_eq!(classify_weight(-1, 3), WeightRegion::Ec2Cone);
        assert_eq!(classify_weight(0, -1), WeightRegion::Zero);
    }

    #[test]
    fn classify_partitions_the_plane() {
        for b in -10..=10 {
            for q in -10..=10 {
                let preds = [
                    b >= 0 && b + q >= 0,
                    b >= 1 && b + q < 0,
                    b < 0 && b + q >= 0,
                    (b < 0 && b + q < 0) || (b == 0 && q < 0),
                ];
                assert_eq!(preds.iter().filter(|x| **x).count(), 1, "({b},{q})");
                let expected = match preds.iter().position(|x| *x).unwrap() {
                    0 => WeightRegion::PointCone,
                    1 => WeightRegion::TildeBlock(b as u32),
                    2 => WeightRegion::Ec2Cone,
                    _ => WeightRegion::Zero,
                };
                assert_eq!(classify_weight(b, q), expected);
            }
        }
    }

    #[test]
    fn addition_group_laws_on_window() {
        let pts: Vec<MotDegree> = (-2..=2)
            .flat_map(|a| (-2..=2).map(move |p| d(a, p, p - a, a)))
            .collect();
        for &x in &pts {
            assert_eq!(x + (-x), MotDegree::ZERO);
            for &y in &pts {
                assert_eq!(x + y, y + x);
                for &z in &pts {
                    assert_eq!((x + y) + z, x + (y + z));
                }
            }
        }
    }

    fn degree() -> impl Strategy<Value = MotDegree> {
        (-100..100i32, -100..100i32, -100..100i32, -100..100i32)
            .prop_map(|(a, p, b, q)| d(a, p, b, q))
    }

    proptest! {
        #[test]
        fn add_is_associative(x in degree(), y in degree(), z in degree()) {
            prop_assert_eq!(degree_add(degree_add(x, y), z), degree_add(x, degree_add(y, z)));
        }

        #[test]
        fn add_is_commutative(x in degree(), y in degree()) {
            prop_assert_eq!(degree_add(x, y), degree_add(y, x));
        }
    }
}
