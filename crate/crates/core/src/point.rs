//! The topological side: the point ring M = H^★_Br(pt; ℤ/2), the rings of EC₂ and ẼC₂, the
//! truncated blocks B_i, and singular cohomology of BC₂.
//!
//! Degrees: |a| = σ, |u| = −1+σ, |θ| = 2−2σ.

use serde::{Deserialize, Serialize};

use crate::error::InvariantError;
use crate::f2::{F2Sum, Graded, Monomial};
use crate::grading::RO2Degree;
use crate::mutation::{self, Mutation};

/// A monomial of M: either a^m u^n in the positive cone or θ/(a^m u^n) in the negative cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PtMono {
    Pos { m: u32, n: u32 },
    Neg { m: u32, n: u32 },
}

pub type PtElem = F2Sum<PtMono>;

impl PtMono {
    pub const ONE: PtMono = PtMono::Pos { m: 0, n: 0 };
    pub const A: PtMono = PtMono::Pos { m: 1, n: 0 };
    pub const U: PtMono = PtMono::Pos { m: 0, n: 1 };
    pub const THETA: PtMono = PtMono::Neg { m: 0, n: 0 };

    pub fn degree(&self) -> RO2Degree {
        match *self {
            PtMono::Pos { m, n } => {
                let (m, n) = (m as i32, n as i32);
                RO2Degree::new(-n, m + n)
            }
            PtMono::Neg { m, n } => {
                let (m, n) = (m as i32, n as i32);
                RO2Degree::new(2 + n, -(2 + m + n))
            }
        }
    }

    pub fn is_negative_cone(&self) -> bool {
        matches!(self, PtMono::Neg { .. })
    }

    /// Multiplication by u^k.
    pub fn times_u(&self, k: u32) -> Option<PtMono> {
        self.mul(&PtMono::Pos { m: 0, n: k })
    }
}

impl Monomial for PtMono {
    fn one() -> Self {
        PtMono::ONE
    }

    fn mul(&self, other: &Self) -> Option<Self> {
        use PtMono::*;
        match (*self, *other) {
            (Pos { m, n }, Pos { m: m2, n: n2 }) => Some(Pos {
                m: m + m2,
                n: n + n2,
            }),
            (Pos { m, n }, Neg { m: m2, n: n2 }) | (Neg { m: m2, n: n2 }, Pos { m, n }) => {
                Some(Neg {
                    m: m2.checked_sub(m)?,
                    n: n2.checked_sub(n)?,
                })
            }
            (Neg { .. }, Neg { .. }) => None,
        }
    }
}

impl Graded for PtMono {
    type Degree = RO2Degree;

    fn degree(&self) -> RO2Degree {
        PtMono::degree(self)
    }
}

pub fn pt_mul(x: &PtElem, y: &PtElem) -> PtElem {
    x * y
}

/// The monomials of M in degree `d`; there is at most one.
pub fn pt_basis(d: RO2Degree) -> Vec<PtMono> {
    let RO2Degree { a, p } = d;
    if a <= 0 && p >= -a {
        vec![PtMono::Pos {
            m: (p + a) as u32,
            n: (-a) as u32,
        }]
    } else if a >= 2 && p <= -a {
        vec![PtMono::Neg {
            m: (-p - a) as u32,
            n: (a - 2) as u32,
        }]
    } else {
        Vec::new()
    }
}

/// a^m u^n in H^★_Br(EC₂) = ℤ/2[a, u^{±1}].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ec2TopMono {
    pub m: u32,
    pub n: i32,
}

pub type Ec2TopElem = F2Sum<Ec2TopMono>;

impl Ec2TopMono {
    pub fn degree(&self) -> RO2Degree {
        let m = self.m as i32;
        RO2Degree::new(-self.n, m + self.n)
    }
}

impl Monomial for Ec2TopMono {
    fn one() -> Self {
        Ec2TopMono { m: 0, n: 0 }
    }

    fn mul(&self, other: &Self) -> Option<Self> {
        Some(Ec2TopMono {
            m: self.m + other.m,
            n: self.n + other.n,
        })
    }
}

impl Graded for Ec2TopMono {
    type Degree = RO2Degree;

    fn degree(&self) -> RO2Degree {
        Ec2TopMono::degree(self)
    }
}

pub fn ec2top_mul(x: &Ec2TopElem, y: &Ec2TopElem) -> Ec2TopElem {
    x * y
}

pub fn ec2top_basis(d: RO2Degree) -> Vec<Ec2TopMono> {
    let RO2Degree { a, p } = d;
    if p + a >= 0 {
        vec![Ec2TopMono {
            m: (p + a) as u32,
            n: -a,
        }]
    } else {
        Vec::new()
    }
}

pub fn localize_mono(x: &PtMono) -> Option<Ec2TopMono> {
    match *x {
        PtMono::Pos { m, n } => Some(Ec2TopMono { m, n: n as i32 }),
        PtMono::Neg { .. } => None,
    }
}

/// The localization M → M[u⁻¹] = H^★_Br(EC₂). Kills the negative cone.
pub fn localize(x: &PtElem) -> Ec2TopElem {
    x.map_linear(localize_mono)
}

/// θ a^m u^{−n} in H̃^★_Br(ẼC₂) = Σ^{2−2σ} ℤ/2[a^{±1}, u^{−1}].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TildeTopMono {
    pub m: i32,
    pub n: u32,
}

pub type TildeTopElem = F2Sum<TildeTopMono>;

impl TildeTopMono {
    pub const THETA: TildeTopMono = TildeTopMono { m: 0, n: 0 };

    pub fn degree(&self) -> RO2Degree {
        let n = self.n as i32;
        RO2Degree::new(2 + n, self.m - n - 2)
    }
}

impl Graded for TildeTopMono {
    type Degree = RO2Degree;

    fn degree(&self) -> RO2Degree {
        TildeTopMono::degree(self)
    }
}

pub fn tilde_basis(d: RO2Degree) -> Vec<TildeTopMono> {
    let RO2Degree { a, p } = d;
    if a >= 2 {
        vec![TildeTopMono {
            m: p + a,
            n: (a - 2) as u32,
        }]
    } else {
        Vec::new()
    }
}

/// θ a^m u^{−n} ↦ θ/(a^{−m} u^n) when m ≤ 0, zero otherwise.
pub(crate) fn negative_cone_image(m: i32, n: u32) -> Option<PtMono> {
    if m <= 0 {
        Some(PtMono::Neg {
            m: m.unsigned_abs(),
            n,
        })
    } else if mutation::is_active(Mutation::KeepPositiveA) {
        Some(PtMono::Neg { m: 0, n })
    } else {
        None
    }
}

pub fn tilde_to_pt_mono(t: &TildeTopMono) -> Option<PtMono> {
    negative_cone_image(t.m, t.n)
}

/// The map H̃^★_Br(ẼC₂) → M induced by S⁰ → ẼC₂.
pub fn tilde_to_pt(x: &TildeTopElem) -> PtElem {
    x.map_linear(tilde_to_pt_mono)
}

/// The M-module action: a raises m, u lowers n, the negative cone acts by zero.
pub fn act_on_tilde_mono(x: &PtMono, t: &TildeTopMono) -> Option<TildeTopMono> {
    match *x {
        PtMono::Pos { m, n } => Some(TildeTopMono {
            m: t.m + m as i32,
            n: t.n.checked_sub(n)?,
        }),
        PtMono::Neg { .. } => None,
    }
}

pub fn pt_act_tilde(x: &PtElem, t: &TildeTopElem) -> TildeTopElem {
    x.bilinear(t, act_on_tilde_mono)
}

/// n ↦ n−2 for multiplication by u² on a block, killing n < 2.
pub(crate) fn lower_by_u2(n: u32) -> Option<u32> {
    if n >= 2 {
        Some(n - 2)
    } else if mutation::is_active(Mutation::KeepLowU2) {
        Some(0)
    } else {
        None
    }
}

/// An element of B_i = Σ^{2−2σ} ℤ/2[a^{±1}, u^{−1}]/(u^{−2i}), i.e. monomials with n ≤ 2i−1.
///
/// Index 0 stands for the zero module B₀, which only holds zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BElem {
    index: u32,
    terms: TildeTopElem,
}

impl BElem {
    pub fn new(index: u32, terms: TildeTopElem) -> Result<Self, InvariantError> {
        if let Some(t) = terms.terms().find(|t| !fits_block(t.n, index)) {
            return Err(InvariantError::BlockTruncation { n: t.n, index });
        }
        Ok(Self { index, terms })
    }

    pub fn zero(index: u32) -> Self {
        Self {
            index,
            terms: TildeTopElem::zero(),
        }
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn terms(&self) -> &TildeTopElem {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// M-module action, computed in the ẼC₂ module (u only lowers n, so the result stays
    /// inside B_i).
    pub fn act(&self, x: &PtElem) -> BElem {
        BElem {
            index: self.index,
            terms: pt_act_tilde(x, &self.terms),
        }
    }
}

pub(crate) fn fits_block(n: u32, index: u32) -> bool {
    n < 2 * index
}

/// B_i ↪ B_{i+1}.
pub fn b_incl(x: &BElem) -> BElem {
    BElem {
        index: x.index + 1,
        terms: x.terms.clone(),
    }
}

/// ·u²: B_{i+1} → B_i. B₁ maps to B₀ = 0.
pub fn b_mul_u2(x: &BElem) -> BElem {
    let index = x.index.saturating_sub(1);
    if index == 0 {
        return BElem::zero(0);
    }
    BElem {
        index,
        terms: x.terms.map_linear(|t| {
            Some(TildeTopMono {
                m: t.m,
                n: lower_by_u2(t.n)?,
            })
        }),
    }
}

/// The quotient B_{i+1} → B_i: drops monomials with n ≥ 2i.
pub fn b_quot(x: &BElem) -> BElem {
    let index = x.index.saturating_sub(1);
    BElem {
        index,
        terms: x
            .terms
            .map_linear(|t| fits_block(t.n, index).then_some(*t)),
    }
}

/// B_i → M, the restriction of the ẼC₂ map.
pub fn b_to_pt(x: &BElem) -> PtElem {
    tilde_to_pt(&x.terms)
}

pub fn b_basis(index: u32, d: RO2Degree) -> Vec<TildeTopMono> {
    tilde_basis(d)
        .into_iter()
        .filter(|t| fits_block(t.n, index))
        .collect()
}

/// x^k in H^*_sing(BC₂; ℤ/2) = ℤ/2[x], |x| = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TopBc2Mono {
    pub k: u32,
}

pub type TopBc2Elem = F2Sum<TopBc2Mono>;

impl Monomial for TopBc2Mono {
    fn one() -> Self {
        TopBc2Mono { k: 0 }
    }

    fn mul(&self, other: &Self) -> Option<Self> {
        Some(TopBc2Mono {
            k: self.k + other.k,
        })
    }
}

impl Graded for TopBc2Mono {
    type Degree = i32;

    fn degree(&self) -> i32 {
        self.k as i32
    }
}

pub fn topbc2_basis(k: i32) -> Vec<TopBc2Mono> {
    if k >= 0 {
        vec![TopBc2Mono { k: k as u32 }]
    } else {
        Vec::new()
    }
}
