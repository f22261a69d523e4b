//! The motivic rings: H^{★,★}_{C₂}(ℂ; ℤ/2), its restriction to EC₂, the ẼC₂ module, and the
//! integer-graded rings H^{*,*}(ℂ) = ℤ/2[τ] and H^{*,*}(BC₂) = ℤ/2[τ][e₁,e₂]/(e₁² = τe₂).
//!
//! The ring of ℂ splits as a free part M[ξ, τ_σ, μ]/(ξμ − u²) and a torsion part
//! ⊕_{i,j≥1} B_i{μ^i/τ_σ^j}. Free monomials are kept in the normal form min(e, g) = 0 where e
//! and g are the exponents of ξ and μ.

use serde::{Deserialize, Serialize};

use crate::error::InvariantError;
use crate::f2::{F2Sum, Graded, Monomial};
use crate::grading::{Generator, MotDegree, RO2Degree};
use crate::mutation::{self, Mutation};
use crate::point::{
    fits_block, lower_by_u2, negative_cone_image, pt_basis, tilde_basis, PtMono,
};

fn xi_degree() -> MotDegree {
    Generator::Xi.degree()
}

/// x·ξ^e τ_σ^f μ^g with x a monomial of M and min(e, g) = 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeMono {
    x: PtMono,
    e: u32,
    f: u32,
    g: u32,
}

impl FreeMono {
    pub const ONE: FreeMono = FreeMono {
        x: PtMono::ONE,
        e: 0,
        f: 0,
        g: 0,
    };

    /// Brings x·ξ^e τ_σ^f μ^g into normal form by rewriting ξμ → u². Returns `None` when the
    /// accumulated power of u² annihilates x.
    pub fn reduce(x: PtMono, e: u32, f: u32, g: u32) -> Option<FreeMono> {
        let k = e.min(g);
        Some(FreeMono {
            x: x.times_u(2 * k)?,
            e: e - k,
            f,
            g: g - k,
        })
    }

    /// A free monomial from the point ring.
    pub fn from_point(x: PtMono) -> FreeMono {
        FreeMono { x, ..FreeMono::ONE }
    }

    pub fn x(&self) -> PtMono {
        self.x
    }

    /// Exponent of ξ.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// Exponent of τ_σ.
    pub fn f(&self) -> u32 {
        self.f
    }

    /// Exponent of μ.
    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn degree(&self) -> MotDegree {
        let (e, f, g) = (self.e as i32, self.f as i32, self.g as i32);
        MotDegree::new(
            self.x.degree() + e * xi_degree().deg,
            RO2Degree::new(g - e, e + f - g),
        )
    }
}

/// (θ a^m u^{−n})·μ^i/τ_σ^j in B_i{μ^i/τ_σ^j}, with i, j ≥ 1 and n ≤ 2i−1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorMono {
    i: u32,
    j: u32,
    m: i32,
    n: u32,
}

impl TorMono {
    pub fn new(i: u32, j: u32, m: i32, n: u32) -> Result<TorMono, InvariantError> {
        if i == 0 || j == 0 {
            return Err(InvariantError::TorsionIndex { i, j });
        }
        if !fits_block(n, i) {
            return Err(InvariantError::BlockTruncation { n, index: i });
        }
        Ok(TorMono { i, j, m, n })
    }

    /// Exponent of μ, which is also the block index.
    pub fn i(&self) -> u32 {
        self.i
    }

    /// Exponent of τ_σ^{−1}.
    pub fn j(&self) -> u32 {
        self.j
    }

    /// Exponent of a.
    pub fn m(&self) -> i32 {
        self.m
    }

    /// Exponent of u^{−1}.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> MotDegree {
        let (i, j, n) = (self.i as i32, self.j as i32, self.n as i32);
        MotDegree::new(
            RO2Degree::new(2 + n, self.m - n - 2),
            RO2Degree::new(i, -(i + j)),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MotMono {
    Free(FreeMono),
    Tor(TorMono),
}

pub type MotElem = F2Sum<MotMono>;

impl MotMono {
    pub const ONE: MotMono = MotMono::Free(FreeMono::ONE);

    pub fn degree(&self) -> MotDegree {
        match self {
            MotMono::Free(f) => f.degree(),
            MotMono::Tor(t) => t.degree(),
        }
    }
}

impl From<FreeMono> for MotMono {
    fn from(f: FreeMono) -> Self {
        MotMono::Free(f)
    }
}

impl From<TorMono> for MotMono {
    fn from(t: TorMono) -> Self {
        MotMono::Tor(t)
    }
}

/// Action of the point, μ and ξ parts of a free monomial on θ a^m u^{−n} ∈ B_i: a raises m,
/// u lowers n, μ is the inclusion B_i → B_{i+1} and ξ is ·u²: B_i → B_{i−1}.
fn act_on_block(f: &FreeMono, i: u32, m: i32, n: u32) -> Option<(u32, i32, u32)> {
    let PtMono::Pos { m: am, n: un } = f.x else {
        return None;
    };
    let mut i = i + f.g;
    let m = m + am as i32;
    let mut n = n.checked_sub(un)?;
    for _ in 0..f.e {
        // B_1 · ξ lands in B_0 = 0
        if i < 2 {
            return None;
        }
        n = lower_by_u2(n)?;
        i -= 1;
    }
    Some((i, m, n))
}

fn free_times_torsion(f: &FreeMono, t: &TorMono) -> Option<MotMono> {
    let (i, m, n) = act_on_block(f, t.i, t.m, t.n)?;
    if f.f < t.j {
        return Some(MotMono::Tor(TorMono {
            i,
            j: t.j - f.f,
            m,
            n,
        }));
    }
    // Crossing into the free part through B_i → M, landing in M{μ^i τ_σ^{f−j}}.
    let x = negative_cone_image(m, n)?;
    FreeMono::reduce(x, 0, f.f - t.j, i).map(MotMono::Free)
}

impl Monomial for MotMono {
    fn one() -> Self {
        MotMono::ONE
    }

    fn mul(&self, other: &Self) -> Option<Self> {
        match (self, other) {
            (MotMono::Free(x), MotMono::Free(y)) => {
                let p = x.x.mul(&y.x)?;
                FreeMono::reduce(p, x.e + y.e, x.f + y.f, x.g + y.g).map(MotMono::Free)
            }
            (MotMono::Free(f), MotMono::Tor(t)) | (MotMono::Tor(t), MotMono::Free(f)) => {
                free_times_torsion(f, t)
            }
            (MotMono::Tor(s), MotMono::Tor(_)) => {
                if mutation::is_active(Mutation::TorsionProducts) {
                    Some(MotMono::Tor(*s))
                } else {
                    None
                }
            }
        }
    }
}

impl Graded for MotMono {
    type Degree = MotDegree;

    fn degree(&self) -> MotDegree {
        MotMono::degree(self)
    }
}

pub fn mot_mul(x: &MotElem, y: &MotElem) -> MotElem {
    x * y
}

/// The free-part terms of an element.
pub fn free_part(x: &MotElem) -> F2Sum<FreeMono> {
    x.map_linear(|m| match m {
        MotMono::Free(f) => Some(*f),
        MotMono::Tor(_) => None,
    })
}

/// (ξ, τ_σ, μ) exponents of the unique normal-form weight monomial in weight b+qσ with b+q ≥ 0.
fn free_weight_exponents(wt: RO2Degree) -> Option<(u32, u32, u32)> {
    let (b, q) = (wt.a, wt.p);
    if b + q < 0 {
        return None;
    }
    let f = (b + q) as u32;
    Some(if b >= 0 { (0, f, b as u32) } else { ((-b) as u32, f, 0) })
}

/// The normal-form monomials of H^{★,★}_{C₂}(ℂ) in bidegree `d`.
pub fn mot_basis(d: MotDegree) -> Vec<MotMono> {
    let (b, q) = (d.wt.a, d.wt.p);
    if let Some((e, f, g)) = free_weight_exponents(d.wt) {
        let x_deg = d.deg - (e as i32) * xi_degree().deg;
        pt_basis(x_deg)
            .into_iter()
            .map(|x| MotMono::Free(FreeMono { x, e, f, g }))
            .collect()
    } else if b >= 1 {
        let (i, j) = (b as u32, (-(b + q)) as u32);
        tilde_basis(d.deg)
            .into_iter()
            .filter(|t| fits_block(t.n, i))
            .map(|t| MotMono::Tor(TorMono { i, j, m: t.m, n: t.n }))
            .collect()
    } else {
        Vec::new()
    }
}

/// x·ξ^e τ_σ^f in H^{★,★}_{C₂}(EC₂) = M[ξ^{±1}, τ_σ].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ec2MotMono {
    pub x: PtMono,
    pub e: i32,
    pub f: u32,
}

pub type Ec2MotElem = F2Sum<Ec2MotMono>;

impl Ec2MotMono {
    pub fn degree(&self) -> MotDegree {
        let f = self.f as i32;
        MotDegree::new(
            self.x.degree() + self.e * xi_degree().deg,
            RO2Degree::new(-self.e, self.e + f),
        )
    }
}

impl Monomial for Ec2MotMono {
    fn one() -> Self {
        Ec2MotMono {
            x: PtMono::ONE,
            e: 0,
            f: 0,
        }
    }

    fn mul(&self, other: &Self) -> Option<Self> {
        Some(Ec2MotMono {
            x: self.x.mul(&other.x)?,
            e: self.e + other.e,
            f: self.f + other.f,
        })
    }
}

impl Graded for Ec2MotMono {
    type Degree = MotDegree;

    fn degree(&self) -> MotDegree {
        Ec2MotMono::degree(self)
    }
}

pub fn ec2mot_mul(x: &Ec2MotElem, y: &Ec2MotElem) -> Ec2MotElem {
    x * y
}

pub fn ec2mot_basis(d: MotDegree) -> Vec<Ec2MotMono> {
    let (b, q) = (d.wt.a, d.wt.p);
    if b + q < 0 {
        return Vec::new();
    }
    let e = -b;
    pt_basis(d.deg - e * xi_degree().deg)
        .into_iter()
        .map(|x| Ec2MotMono {
            x,
            e,
            f: (b + q) as u32,
        })
        .collect()
}

/// Restriction along EC₂ → pt: μ ↦ u²ξ^{−1}, torsion ↦ 0.
pub fn restrict_mono(x: &MotMono) -> Option<Ec2MotMono> {
    match x {
        MotMono::Free(f) => Some(Ec2MotMono {
            x: f.x.times_u(2 * f.g)?,
            e: f.e as i32 - f.g as i32,
            f: f.f,
        }),
        MotMono::Tor(_) => None,
    }
}

pub fn restrict_to_ec2(x: &MotElem) -> Ec2MotElem {
    x.map_linear(restrict_mono)
}

/// (θ a^m u^{−n})·μ^i τ_σ^j in B_i{μ^i τ_σ^j} ⊂ H̃^{★,★}_{C₂}(ẼC₂), with i ≥ 1 and n ≤ 2i−1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TildeMotMono {
    i: u32,
    j: i32,
    m: i32,
    n: u32,
}

pub type TildeMotElem = F2Sum<TildeMotMono>;

impl TildeMotMono {
    pub fn new(i: u32, j: i32, m: i32, n: u32) -> Result<TildeMotMono, InvariantError> {
        if i == 0 {
            return Err(InvariantError::TildeIndex(i));
        }
        if !fits_block(n, i) {
            return Err(InvariantError::BlockTruncation { n, index: i });
        }
        Ok(TildeMotMono { i, j, m, n })
    }

    /// Exponent of μ and block index.
    pub fn i(&self) -> u32 {
        self.i
    }

    /// Exponent of τ_σ.
    pub fn j(&self) -> i32 {
        self.j
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> MotDegree {
        let (i, n) = (self.i as i32, self.n as i32);
        MotDegree::new(
            RO2Degree::new(2 + n, self.m - n - 2),
            RO2Degree::new(i, self.j - i),
        )
    }
}

impl Graded for TildeMotMono {
    type Degree = MotDegree;

    fn degree(&self) -> MotDegree {
        TildeMotMono::degree(self)
    }
}

pub fn tildemot_basis(d: MotDegree) -> Vec<TildeMotMono> {
    let (b, q) = (d.wt.a, d.wt.p);
    if b < 1 {
        return Vec::new();
    }
    let i = b as u32;
    tilde_basis(d.deg)
        .into_iter()
        .filter(|t| fits_block(t.n, i))
        .map(|t| TildeMotMono {
            i,
            j: b + q,
            m: t.m,
            n: t.n,
        })
        .collect()
}

/// Action of a free monomial on the ẼC₂ module: τ_σ raises j, μ includes, ξ multiplies by u².
pub fn tildemot_act_mono(x: &FreeMono, t: &TildeMotMono) -> Option<TildeMotMono> {
    let (i, m, n) = act_on_block(x, t.i, t.m, t.n)?;
    Some(TildeMotMono {
        i,
        j: t.j + x.f as i32,
        m,
        n,
    })
}

pub fn tildemot_act(x: &F2Sum<FreeMono>, t: &TildeMotElem) -> TildeMotElem {
    x.bilinear(t, tildemot_act_mono)
}

/// The map H̃(ẼC₂) → H(ℂ): an isomorphism onto the torsion part when b+q < 0, and
/// B_i → M followed by the μ^i τ_σ^j labelling when b+q ≥ 0.
pub fn tilde_to_mot_mono(t: &TildeMotMono) -> Option<MotMono> {
    if t.j < 0 {
        Some(MotMono::Tor(TorMono {
            i: t.i,
            j: t.j.unsigned_abs(),
            m: t.m,
            n: t.n,
        }))
    } else {
        let x = negative_cone_image(t.m, t.n)?;
        FreeMono::reduce(x, 0, t.j as u32, t.i).map(MotMono::Free)
    }
}

pub fn tilde_to_mot(x: &TildeMotElem) -> MotElem {
    x.map_linear(tilde_to_mot_mono)
}

/// τ^k e₁^ε e₂^l in H^{*,*}(BC₂; ℤ/2), with ε ∈ {0, 1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bc2Mono {
    k: u32,
    e1: u32,
    e2: u32,
}

pub type Bc2Elem = F2Sum<Bc2Mono>;

impl Bc2Mono {
    /// Normal form of τ^k e₁^{e1} e₂^{e2}, rewriting e₁² → τe₂.
    pub fn reduce(k: u32, e1: u32, e2: u32) -> Bc2Mono {
        let pairs = e1 / 2;
        Bc2Mono {
            k: k + pairs,
            e1: e1 % 2,
            e2: e2 + pairs,
        }
    }

    pub fn tau_exp(&self) -> u32 {
        self.k
    }

    pub fn e1_exp(&self) -> u32 {
        self.e1
    }

    pub fn e2_exp(&self) -> u32 {
        self.e2
    }

    /// Integer bidegree (a, b).
    pub fn bidegree(&self) -> (i32, i32) {
        let (k, e1, e2) = (self.k as i32, self.e1 as i32, self.e2 as i32);
        (e1 + 2 * e2, e1 + e2 + k)
    }

    pub fn degree(&self) -> MotDegree {
        let (a, b) = self.bidegree();
        MotDegree::from_ints(a, 0, b, 0)
    }
}

impl Monomial for Bc2Mono {
    fn one() -> Self {
        Bc2Mono { k: 0, e1: 0, e2: 0 }
    }

    fn mul(&self, other: &Self) -> Option<Self> {
        Some(Bc2Mono::reduce(
            self.k + other.k,
            self.e1 + other.e1,
            self.e2 + other.e2,
        ))
    }
}

impl Graded for Bc2Mono {
    type Degree = MotDegree;

    fn degree(&self) -> MotDegree {
        Bc2Mono::degree(self)
    }
}

pub fn bc2_mul(x: &Bc2Elem, y: &Bc2Elem) -> Bc2Elem {
    x * y
}

pub fn bc2_basis(a: i32, b: i32) -> Vec<Bc2Mono> {
    if a < 0 {
        return Vec::new();
    }
    let e1 = a % 2;
    let e2 = (a - e1) / 2;
    let k = b - e1 - e2;
    if k < 0 {
        return Vec::new();
    }
    vec![Bc2Mono {
        k: k as u32,
        e1: e1 as u32,
        e2: e2 as u32,
    }]
}

pub fn bc2_dim(a: i32, b: i32) -> usize {
    bc2_basis(a, b).len()
}

/// e₁ ↦ auτ_σ/ξ, e₂ ↦ a²τ_σ/ξ, τ ↦ u²τ_σ/ξ.
pub fn bc2_to_ec2mot_mono(x: &Bc2Mono) -> Ec2MotMono {
    let t = x.k + x.e1 + x.e2;
    Ec2MotMono {
        x: PtMono::Pos {
            m: x.e1 + 2 * x.e2,
            n: x.e1 + 2 * x.k,
        },
        e: -(t as i32),
        f: t,
    }
}

pub fn bc2_to_ec2mot(x: &Bc2Elem) -> Ec2MotElem {
    x.map_linear(|m| Some(bc2_to_ec2mot_mono(m)))
}

/// τ^k in H^{*,*}(ℂ; ℤ/2) = ℤ/2[τ].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CFieldMono {
    pub k: u32,
}

pub type CFieldElem = F2Sum<CFieldMono>;

impl Monomial for CFieldMono {
    fn one() -> Self {
        CFieldMono { k: 0 }
    }

    fn mul(&self, other: &Self) -> Option<Self> {
        Some(CFieldMono { k: self.k + other.k })
    }
}

impl Graded for CFieldMono {
    type Degree = MotDegree;

    fn degree(&self) -> MotDegree {
        MotDegree::from_ints(0, 0, self.k as i32, 0)
    }
}

pub fn cfield_basis(a: i32, b: i32) -> Vec<CFieldMono> {
    if a == 0 && b >= 0 {
        vec![CFieldMono { k: b as u32 }]
    } else {
        Vec::new()
    }
}

/// τ ↦ μτ_σ.
pub fn cfield_to_mot_mono(x: &CFieldMono) -> MotMono {
    MotMono::Free(FreeMono {
        x: PtMono::ONE,
        e: 0,
        f: x.k,
        g: x.k,
    })
}
