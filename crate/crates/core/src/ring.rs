//! Uniform access to every ring and module by name: parsing, printing, products, bases and
//! realization.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::expr::{parse_raw, Atom, ExprError, RawMono, Violation};
use crate::f2::{F2Sum, NotHomogeneous};
use crate::grading::{MotDegree, RO2Degree};
use crate::motivic::{
    bc2_basis, cfield_basis, ec2mot_basis, free_part, mot_basis, tildemot_act, tildemot_basis,
    Bc2Elem, Bc2Mono, CFieldElem, CFieldMono, Ec2MotElem, Ec2MotMono, FreeMono, MotElem, MotMono,
    TildeMotElem, TildeMotMono, TorMono,
};
use crate::point::{
    b_basis, ec2top_basis, pt_act_tilde, pt_basis, tilde_basis, topbc2_basis, BElem, Ec2TopElem,
    Ec2TopMono, PtElem, PtMono, TildeTopElem, TildeTopMono, TopBc2Elem, TopBc2Mono,
};
use crate::realization::{re_bc2, re_ec2, re_point, re_tilde};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingId {
    /// M = H^★_{C₂}(pt).
    Pt,
    /// H^★_{C₂}(EC₂) = ℤ/2[a, u^{±1}].
    Ec2Top,
    /// H̃^★_{C₂}(ẼC₂), a module over M.
    TildeTop,
    /// The truncation B_i, a module over M.
    B(u32),
    /// H^{★,★}_{C₂}(ℂ; ℤ/2).
    Motivic,
    /// H^{★,★}_{C₂}(EC₂ × ℂ).
    Ec2Mot,
    /// H̃^{★,★}_{C₂}(ẼC₂), a module over the motivic ring.
    TildeMot,
    /// H^{*,*}(BC₂; ℤ/2) over ℂ.
    Bc2,
    /// H^{*,*}(ℂ; ℤ/2) = ℤ/2[τ].
    CField,
    /// H^*(BC₂; ℤ/2) = ℤ/2[x].
    TopBc2,
}

impl RingId {
    pub fn name(&self) -> String {
        match self {
            RingId::Pt => "pt".into(),
            RingId::Ec2Top => "ec2top".into(),
            RingId::TildeTop => "tildetop".into(),
            RingId::B(i) => format!("b({i})"),
            RingId::Motivic => "motivic".into(),
            RingId::Ec2Mot => "ec2mot".into(),
            RingId::TildeMot => "tildemot".into(),
            RingId::Bc2 => "bc2".into(),
            RingId::CField => "cfield".into(),
            RingId::TopBc2 => "topbc2".into(),
        }
    }

    /// Atoms accepted by the parser for this ring.
    pub fn atoms(&self) -> &'static [Atom] {
        use Atom::*;
        match self {
            RingId::Pt | RingId::Ec2Top | RingId::TildeTop | RingId::B(_) => &[Theta, A, U],
            RingId::Motivic => &[Theta, A, U, Xi, Mu, TauS, Tau],
            RingId::Ec2Mot => &[Theta, A, U, Xi, TauS],
            RingId::TildeMot => &[Theta, A, U, Mu, TauS],
            RingId::Bc2 => &[Tau, E1, E2],
            RingId::CField => &[Tau],
            RingId::TopBc2 => &[X],
        }
    }

    /// Whether elements of this ring can be multiplied together.
    pub fn has_product(&self) -> bool {
        self.acting_ring().is_none()
    }

    /// For modules, the ring acting on them.
    pub fn acting_ring(&self) -> Option<RingId> {
        match self {
            RingId::TildeTop | RingId::B(_) => Some(RingId::Pt),
            RingId::TildeMot => Some(RingId::Motivic),
            _ => None,
        }
    }

    /// The topological counterpart under Betti realization.
    pub fn realization(&self) -> Option<RingId> {
        match self {
            RingId::Motivic => Some(RingId::Pt),
            RingId::Ec2Mot => Some(RingId::Ec2Top),
            RingId::TildeMot => Some(RingId::TildeTop),
            RingId::Bc2 => Some(RingId::TopBc2),
            _ => None,
        }
    }

    /// Topological rings live in weight zero only.
    pub fn is_topological(&self) -> bool {
        matches!(
            self,
            RingId::Pt | RingId::Ec2Top | RingId::TildeTop | RingId::B(_) | RingId::TopBc2
        )
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown ring '{0}' (expected pt, ec2top, tildetop, b(i), motivic, ec2mot, tildemot, bc2, cfield or topbc2)")]
pub struct UnknownRing(pub String);

impl FromStr for RingId {
    type Err = UnknownRing;

    fn from_str(s: &str) -> Result<Self, UnknownRing> {
        let t = s.trim().to_ascii_lowercase();
        Ok(match t.as_str() {
            "pt" => RingId::Pt,
            "ec2top" => RingId::Ec2Top,
            "tildetop" => RingId::TildeTop,
            "motivic" => RingId::Motivic,
            "ec2mot" => RingId::Ec2Mot,
            "tildemot" => RingId::TildeMot,
            "bc2" => RingId::Bc2,
            "cfield" => RingId::CField,
            "topbc2" => RingId::TopBc2,
            _ => {
                let inner = t
                    .strip_prefix("b(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| t.strip_prefix('b'));
                match inner.and_then(|i| i.parse::<u32>().ok()).filter(|&i| i >= 1) {
                    Some(i) => RingId::B(i),
                    None => return Err(UnknownRing(s.to_owned())),
                }
            }
        })
    }
}

impl Serialize for RingId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for RingId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RingError {
    #[error(transparent)]
    Parse(#[from] ExprError),
    #[error("{0} has no product; it is a module over {1}")]
    NoProduct(RingId, RingId),
    #[error("cannot combine an element of {0} with an element of {1}")]
    Mismatch(RingId, RingId),
    #[error("{0} has no realization")]
    NoRealization(RingId),
    #[error("torsion elements of the motivic ring do not act on tildemot")]
    TorsionAction,
    #[error(transparent)]
    NotHomogeneous(#[from] NotHomogeneous),
}

/// An element of one of the rings or modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Pt(PtElem),
    Ec2Top(Ec2TopElem),
    TildeTop(TildeTopElem),
    B(BElem),
    Motivic(MotElem),
    Ec2Mot(Ec2MotElem),
    TildeMot(TildeMotElem),
    Bc2(Bc2Elem),
    CField(CFieldElem),
    TopBc2(TopBc2Elem),
}

/// Monomials with a raw exponent vector and a bidegree.
trait Notation: Ord + Clone {
    fn to_raw(&self) -> RawMono;
    fn bidegree(&self) -> MotDegree;
}

fn raw(pairs: &[(Atom, i32)]) -> RawMono {
    RawMono::from_pairs(pairs)
}

impl Notation for PtMono {
    fn to_raw(&self) -> RawMono {
        match *self {
            PtMono::Pos { m, n } => raw(&[(Atom::A, m as i32), (Atom::U, n as i32)]),
            PtMono::Neg { m, n } => raw(&[
                (Atom::Theta, 1),
                (Atom::A, -(m as i32)),
                (Atom::U, -(n as i32)),
            ]),
        }
    }

    fn bidegree(&self) -> MotDegree {
        MotDegree::topological(self.degree())
    }
}

impl Notation for Ec2TopMono {
    fn to_raw(&self) -> RawMono {
        raw(&[(Atom::A, self.m as i32), (Atom::U, self.n)])
    }

    fn bidegree(&self) -> MotDegree {
        MotDegree::topological(self.degree())
    }
}

impl Notation for TildeTopMono {
    fn to_raw(&self) -> RawMono {
        raw(&[
            (Atom::Theta, 1),
            (Atom::A, self.m),
            (Atom::U, -(self.n as i32)),
        ])
    }

    fn bidegree(&self) -> MotDegree {
        MotDegree::topological(self.degree())
    }
}

impl Notation for MotMono {
    fn to_raw(&self) -> RawMono {
        match self {
            MotMono::Free(f) => f.x().to_raw().times(&raw(&[
                (Atom::Xi, f.e() as i32),
                (Atom::TauS, f.f() as i32),
                (Atom::Mu, f.g() as i32),
            ])),
            MotMono::Tor(t) => raw(&[
                (Atom::Theta, 1),
                (Atom::A, t.m()),
                (Atom::U, -(t.n() as i32)),
                (Atom::Mu, t.i() as i32),
                (Atom::TauS, -(t.j() as i32)),
            ]),
        }
    }

    fn bidegree(&self) -> MotDegree {
        self.degree()
    }
}

impl Notation for Ec2MotMono {
    fn to_raw(&self) -> RawMono {
        self.x
            .to_raw()
            .times(&raw(&[(Atom::Xi, self.e), (Atom::TauS, self.f as i32)]))
    }

    fn bidegree(&self) -> MotDegree {
        self.degree()
    }
}

impl Notation for TildeMotMono {
    fn to_raw(&self) -> RawMono {
        raw(&[
            (Atom::Theta, 1),
            (Atom::A, self.m()),
            (Atom::U, -(self.n() as i32)),
            (Atom::Mu, self.i() as i32),
            (Atom::TauS, self.j()),
        ])
    }

    fn bidegree(&self) -> MotDegree {
        self.degree()
    }
}

impl Notation for Bc2Mono {
    fn to_raw(&self) -> RawMono {
        raw(&[
            (Atom::Tau, self.tau_exp() as i32),
            (Atom::E1, self.e1_exp() as i32),
            (Atom::E2, self.e2_exp() as i32),
        ])
    }

    fn bidegree(&self) -> MotDegree {
        self.degree()
    }
}

impl Notation for CFieldMono {
    fn to_raw(&self) -> RawMono {
        raw(&[(Atom::Tau, self.k as i32)])
    }

    fn bidegree(&self) -> MotDegree {
        MotDegree::from_ints(0, 0, self.k as i32, 0)
    }
}

impl Notation for TopBc2Mono {
    fn to_raw(&self) -> RawMono {
        raw(&[(Atom::X, self.k as i32)])
    }

    fn bidegree(&self) -> MotDegree {
        MotDegree::from_ints(self.k as i32, 0, 0, 0)
    }
}

fn print_sum<M: Notation>(x: &F2Sum<M>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(MotDegree, String)> = x
        .terms()
        .map(|m| (m.bidegree(), m.to_raw().to_string()))
        .collect();
    terms.sort_by(|(d1, s1), (d2, s2)| d1.coords().cmp(&d2.coords()).then(s1.cmp(s2)));
    terms
        .into_iter()
        .map(|(_, s)| s)
        .collect::<Vec<_>>()
        .join(" + ")
}

fn sum_degree<M: Notation>(x: &F2Sum<M>) -> Result<Option<MotDegree>, NotHomogeneous> {
    x.homogeneous_degree(|m| m.bidegree())
}

// Validation of raw terms, one ring at a time.

fn nonneg(r: &RawMono, a: Atom) -> Result<u32, Violation> {
    let k = r.get(a);
    u32::try_from(k).map_err(|_| Violation::NegativeExponent(a))
}

fn point_from_raw(r: &RawMono) -> Result<PtMono, Violation> {
    let (t, a, u) = (r.get(Atom::Theta), r.get(Atom::A), r.get(Atom::U));
    match t {
        0 => {
            for (atom, k) in [(Atom::A, a), (Atom::U, u)] {
                if k < 0 {
                    return Err(Violation::NegativeWithoutTheta(atom));
                }
            }
            Ok(PtMono::Pos {
                m: a as u32,
                n: u as u32,
            })
        }
        1 => {
            for (atom, k) in [(Atom::A, a), (Atom::U, u)] {
                if k > 0 {
                    return Err(Violation::PositiveWithTheta(atom));
                }
            }
            Ok(PtMono::Neg {
                m: a.unsigned_abs(),
                n: u.unsigned_abs(),
            })
        }
        t => Err(Violation::ThetaExponent(t)),
    }
}

/// θ a^m u^{−n}: returns (m, n).
fn theta_term(r: &RawMono) -> Result<(i32, u32), Violation> {
    match r.get(Atom::Theta) {
        1 => {}
        0 => return Err(Violation::ThetaRequired),
        t => return Err(Violation::ThetaExponent(t)),
    }
    let u = r.get(Atom::U);
    if u > 0 {
        return Err(Violation::PositiveWithTheta(Atom::U));
    }
    Ok((r.get(Atom::A), u.unsigned_abs()))
}

fn motivic_from_raw(r: &RawMono) -> Result<Option<MotMono>, Violation> {
    let tau = nonneg(r, Atom::Tau)? as i32;
    let r = r
        .with(Atom::Tau, 0)
        .with(Atom::Mu, r.get(Atom::Mu) + tau)
        .with(Atom::TauS, r.get(Atom::TauS) + tau);
    if r.get(Atom::TauS) >= 0 {
        let x = point_from_raw(&r)?;
        let e = nonneg(&r, Atom::Xi)?;
        let g = nonneg(&r, Atom::Mu)?;
        let f = r.get(Atom::TauS) as u32;
        return Ok(FreeMono::reduce(x, e, f, g).map(MotMono::Free));
    }
    if r.get(Atom::Theta) != 1 {
        return Err(Violation::TorsionNeedsTheta);
    }
    if r.get(Atom::Xi) != 0 {
        return Err(Violation::TorsionWithXi);
    }
    let (m, n) = theta_term(&r)?;
    let i = r.get(Atom::Mu);
    if i < 1 {
        return Err(Violation::MuRequired);
    }
    let j = r.get(Atom::TauS).unsigned_abs();
    Ok(Some(MotMono::Tor(TorMono::new(i as u32, j, m, n)?)))
}

fn ec2mot_from_raw(r: &RawMono) -> Result<Ec2MotMono, Violation> {
    Ok(Ec2MotMono {
        x: point_from_raw(r)?,
        e: r.get(Atom::Xi),
        f: nonneg(r, Atom::TauS)?,
    })
}

fn tildemot_from_raw(r: &RawMono) -> Result<TildeMotMono, Violation> {
    let (m, n) = theta_term(r)?;
    let i = r.get(Atom::Mu);
    if i < 1 {
        return Err(Violation::MuRequired);
    }
    Ok(TildeMotMono::new(i as u32, r.get(Atom::TauS), m, n)?)
}

fn check_atoms(ring: RingId, r: &RawMono) -> Result<(), ExprError> {
    let allowed = ring.atoms();
    match r.support().find(|(a, _)| !allowed.contains(a)) {
        Some((atom, _)) => Err(ExprError::AtomNotInRing {
            atom,
            ring: ring.name(),
        }),
        None => Ok(()),
    }
}

fn collect<M, F>(ring: RingId, src: &str, mut f: F) -> Result<F2Sum<M>, ExprError>
where
    M: Ord + Clone,
    F: FnMut(&RawMono) -> Result<Option<M>, Violation>,
{
    let mut out = F2Sum::zero();
    for r in parse_raw(src)?.terms() {
        check_atoms(ring, r)?;
        match f(r) {
            Ok(Some(m)) => out.toggle(m),
            Ok(None) => {}
            Err(violation) => {
                return Err(ExprError::Invalid {
                    term: r.to_string(),
                    violation,
                })
            }
        }
    }
    Ok(out)
}

/// Parses `src` as an element of `ring`.
pub fn parse(ring: RingId, src: &str) -> Result<Element, ExprError> {
    Ok(match ring {
        RingId::Pt => Element::Pt(collect(ring, src, |r| point_from_raw(r).map(Some))?),
        RingId::Ec2Top => Element::Ec2Top(collect(ring, src, |r| {
            Ok(Some(Ec2TopMono {
                m: nonneg(r, Atom::A)?,
                n: r.get(Atom::U),
            }))
        })?),
        RingId::TildeTop => Element::TildeTop(collect(ring, src, |r| {
            let (m, n) = theta_term(r)?;
            Ok(Some(TildeTopMono { m, n }))
        })?),
        RingId::B(i) => {
            let terms = collect(ring, src, |r| {
                let (m, n) = theta_term(r)?;
                if 2 * i64::from(i) <= i64::from(n) {
                    return Err(crate::error::InvariantError::BlockTruncation { n, index: i }.into());
                }
                Ok(Some(TildeTopMono { m, n }))
            })?;
            Element::B(BElem::new(i, terms).expect("terms were checked against the block"))
        }
        RingId::Motivic => Element::Motivic(collect(ring, src, motivic_from_raw)?),
        RingId::Ec2Mot => Element::Ec2Mot(collect(ring, src, |r| ec2mot_from_raw(r).map(Some))?),
        RingId::TildeMot => {
            Element::TildeMot(collect(ring, src, |r| tildemot_from_raw(r).map(Some))?)
        }
        RingId::Bc2 => Element::Bc2(collect(ring, src, |r| {
            Ok(Some(Bc2Mono::reduce(
                nonneg(r, Atom::Tau)?,
                nonneg(r, Atom::E1)?,
                nonneg(r, Atom::E2)?,
            )))
        })?),
        RingId::CField => Element::CField(collect(ring, src, |r| {
            Ok(Some(CFieldMono {
                k: nonneg(r, Atom::Tau)?,
            }))
        })?),
        RingId::TopBc2 => Element::TopBc2(collect(ring, src, |r| {
            Ok(Some(TopBc2Mono {
                k: nonneg(r, Atom::X)?,
            }))
        })?),
    })
}

macro_rules! dispatch {
    ($self:expr, $x:ident => $body:expr, $b:ident => $bbody:expr) => {
        match $self {
            Element::Pt($x) => $body,
            Element::Ec2Top($x) => $body,
            Element::TildeTop($x) => $body,
            Element::B($b) => $bbody,
            Element::Motivic($x) => $body,
            Element::Ec2Mot($x) => $body,
            Element::TildeMot($x) => $body,
            Element::Bc2($x) => $body,
            Element::CField($x) => $body,
            Element::TopBc2($x) => $body,
        }
    };
}

impl Element {
    pub fn ring(&self) -> RingId {
        match self {
            Element::Pt(_) => RingId::Pt,
            Element::Ec2Top(_) => RingId::Ec2Top,
            Element::TildeTop(_) => RingId::TildeTop,
            Element::B(b) => RingId::B(b.index()),
            Element::Motivic(_) => RingId::Motivic,
            Element::Ec2Mot(_) => RingId::Ec2Mot,
            Element::TildeMot(_) => RingId::TildeMot,
            Element::Bc2(_) => RingId::Bc2,
            Element::CField(_) => RingId::CField,
            Element::TopBc2(_) => RingId::TopBc2,
        }
    }

    pub fn is_zero(&self) -> bool {
        dispatch!(self, x => x.is_zero(), b => b.is_zero())
    }

    /// Number of monomials.
    pub fn len(&self) -> usize {
        dispatch!(self, x => x.len(), b => b.terms().len())
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// `None` for zero.
    pub fn degree(&self) -> Result<Option<MotDegree>, NotHomogeneous> {
        dispatch!(self, x => sum_degree(x), b => sum_degree(b.terms()))
    }

    /// Canonical form: monomials sorted by degree, then by text.
    pub fn canonical(&self) -> String {
        dispatch!(self, x => print_sum(x), b => print_sum(b.terms()))
    }

    /// The individual monomials, each as a one-term element.
    pub fn monomials(&self) -> Vec<Element> {
        fn split<M: Ord + Clone>(x: &F2Sum<M>, wrap: impl Fn(F2Sum<M>) -> Element) -> Vec<Element> {
            x.terms().map(|m| wrap(F2Sum::from_mono(m.clone()))).collect()
        }
        match self {
            Element::Pt(x) => split(x, Element::Pt),
            Element::Ec2Top(x) => split(x, Element::Ec2Top),
            Element::TildeTop(x) => split(x, Element::TildeTop),
            Element::B(b) => {
                let i = b.index();
                split(b.terms(), |t| {
                    Element::B(BElem::new(i, t).expect("monomial of a valid block element"))
                })
            }
            Element::Motivic(x) => split(x, Element::Motivic),
            Element::Ec2Mot(x) => split(x, Element::Ec2Mot),
            Element::TildeMot(x) => split(x, Element::TildeMot),
            Element::Bc2(x) => split(x, Element::Bc2),
            Element::CField(x) => split(x, Element::CField),
            Element::TopBc2(x) => split(x, Element::TopBc2),
        }
    }

    /// Sum of two elements of the same ring or module.
    pub fn add(&self, other: &Element) -> Result<Element, RingError> {
        use Element::*;
        Ok(match (self, other) {
            (Pt(x), Pt(y)) => Pt(x + y),
            (Ec2Top(x), Ec2Top(y)) => Ec2Top(x + y),
            (TildeTop(x), TildeTop(y)) => TildeTop(x + y),
            (B(x), B(y)) if x.index() == y.index() => B(BElem::new(
                x.index(),
                x.terms() + y.terms(),
            )
            .expect("sum of block elements stays in the block")),
            (Motivic(x), Motivic(y)) => Motivic(x + y),
            (Ec2Mot(x), Ec2Mot(y)) => Ec2Mot(x + y),
            (TildeMot(x), TildeMot(y)) => TildeMot(x + y),
            (Bc2(x), Bc2(y)) => Bc2(x + y),
            (CField(x), CField(y)) => CField(x + y),
            (TopBc2(x), TopBc2(y)) => TopBc2(x + y),
            (x, y) => return Err(RingError::Mismatch(x.ring(), y.ring())),
        })
    }

    /// Product of two elements of the same ring.
    pub fn mul(&self, other: &Element) -> Result<Element, RingError> {
        use Element::*;
        Ok(match (self, other) {
            (Pt(x), Pt(y)) => Pt(x * y),
            (Ec2Top(x), Ec2Top(y)) => Ec2Top(x * y),
            (Motivic(x), Motivic(y)) => Motivic(x * y),
            (Ec2Mot(x), Ec2Mot(y)) => Ec2Mot(x * y),
            (Bc2(x), Bc2(y)) => Bc2(x * y),
            (CField(x), CField(y)) => CField(x * y),
            (TopBc2(x), TopBc2(y)) => TopBc2(x * y),
            (x, y) if x.ring() == y.ring() => {
                let ring = x.ring();
                return Err(RingError::NoProduct(
                    ring,
                    ring.acting_ring().expect("rings without products are modules"),
                ));
            }
            (x, y) => return Err(RingError::Mismatch(x.ring(), y.ring())),
        })
    }

    /// `self · module`, where `self` lies in the ring acting on `module`.
    pub fn act(&self, module: &Element) -> Result<Element, RingError> {
        use Element::*;
        Ok(match (self, module) {
            (Pt(x), TildeTop(t)) => TildeTop(pt_act_tilde(x, t)),
            (Pt(x), B(b)) => B(b.act(x)),
            (Motivic(x), TildeMot(t)) => {
                let free = free_part(x);
                if free.len() != x.len() {
                    return Err(RingError::TorsionAction);
                }
                TildeMot(tildemot_act(&free, t))
            }
            (x, y) => return Err(RingError::Mismatch(x.ring(), y.ring())),
        })
    }

    /// Betti realization.
    pub fn realize(&self) -> Result<Element, RingError> {
        use Element::*;
        Ok(match self {
            Motivic(x) => Pt(re_point(x)),
            Ec2Mot(x) => Ec2Top(re_ec2(x)),
            TildeMot(x) => TildeTop(re_tilde(x)),
            Bc2(x) => TopBc2(re_bc2(x)),
            x => return Err(RingError::NoRealization(x.ring())),
        })
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

/// Multiplies two expressions in `ring`. For modules the left operand is read in the acting
/// ring and acts on the right operand.
pub fn multiply(ring: RingId, lhs: &str, rhs: &str) -> Result<Element, RingError> {
    let right = parse(ring, rhs)?;
    match ring.acting_ring() {
        None => parse(ring, lhs)?.mul(&right),
        Some(acting) => parse(acting, lhs)?.act(&right),
    }
}

fn monos<M: Ord + Clone>(v: Vec<M>, wrap: impl Fn(F2Sum<M>) -> Element) -> Vec<Element> {
    v.into_iter().map(|m| wrap(F2Sum::from_mono(m))).collect()
}

/// Additive basis of `ring` in bidegree `d`. The integer-graded rings (bc2, cfield) use
/// `(deg.a, wt.a)` and are zero when either σ-coefficient is nonzero; topological rings are
/// zero off weight 0.
pub fn basis_at(ring: RingId, d: MotDegree) -> Vec<Element> {
    if ring.is_topological() && d.wt != RO2Degree::ZERO {
        return Vec::new();
    }
    let integral = d.deg.p == 0 && d.wt.p == 0;
    match ring {
        RingId::Pt => monos(pt_basis(d.deg), Element::Pt),
        RingId::Ec2Top => monos(ec2top_basis(d.deg), Element::Ec2Top),
        RingId::TildeTop => monos(tilde_basis(d.deg), Element::TildeTop),
        RingId::B(i) => monos(b_basis(i, d.deg), |t| {
            Element::B(BElem::new(i, t).expect("basis monomials fit the block"))
        }),
        RingId::Motivic => monos(mot_basis(d), Element::Motivic),
        RingId::Ec2Mot => monos(ec2mot_basis(d), Element::Ec2Mot),
        RingId::TildeMot => monos(tildemot_basis(d), Element::TildeMot),
        RingId::Bc2 if integral => monos(bc2_basis(d.deg.a, d.wt.a), Element::Bc2),
        RingId::CField if integral => monos(cfield_basis(d.deg.a, d.wt.a), Element::CField),
        RingId::TopBc2 if integral => monos(topbc2_basis(d.deg.a), Element::TopBc2),
        RingId::Bc2 | RingId::CField | RingId::TopBc2 => Vec::new(),
    }
}

pub fn dim_at(ring: RingId, d: MotDegree) -> usize {
    basis_at(ring, d).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(ring: &str, src: &str) -> String {
        parse(ring.parse().unwrap(), src).unwrap().canonical()
    }

    #[test]
    fn ring_names_round_trip() {
        for r in [
            RingId::Pt,
            RingId::Ec2Top,
            RingId::TildeTop,
            RingId::B(3),
            RingId::Motivic,
            RingId::Ec2Mot,
            RingId::TildeMot,
            RingId::Bc2,
            RingId::CField,
            RingId::TopBc2,
        ] {
            assert_eq!(r.name().parse::<RingId>(), Ok(r));
        }
        assert_eq!("b2".parse::<RingId>(), Ok(RingId::B(2)));
        assert!("b(x)".parse::<RingId>().is_err());
        assert!("b(0)".parse::<RingId>().is_err());
        assert!("sphere".parse::<RingId>().is_err());
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canon("pt", "theta/(a^2*u)"), "theta/(a^2*u)");
        assert_eq!(canon("pt", "u*a^2"), "a^2*u");
        assert_eq!(canon("motivic", "xi*mu"), "u^2");
        assert_eq!(canon("motivic", "tau"), "mu*tau_s");
        assert_eq!(canon("motivic", "theta*mu/tau_s"), "theta*mu/tau_s");
        assert_eq!(canon("motivic", "theta*xi*mu"), "0");
        assert_eq!(canon("tildemot", "theta*a^2*mu*tau_s"), "theta*a^2*mu*tau_s");
        assert_eq!(canon("bc2", "e1^2"), "tau*e2");
        assert_eq!(canon("ec2top", "u^-1"), "1/u");
        assert_eq!(canon("topbc2", "x^3 + x"), "x + x^3");
        assert_eq!(canon("pt", "0"), "0");
        assert_eq!(canon("pt", "1"), "1");
    }

    #[test]
    fn rejections() {
        let err = parse(RingId::B(1), "theta*u^-3").unwrap_err();
        assert!(err.to_string().contains("n > 2i−1 in B_i"), "{err}");
        let err = parse(RingId::Pt, "a^-1").unwrap_err();
        assert_eq!(
            err,
            ExprError::Invalid {
                term: "1/a".into(),
                violation: Violation::NegativeWithoutTheta(Atom::A)
            }
        );
        let err = parse(RingId::Motivic, "mu/tau_s").unwrap_err();
        assert!(matches!(
            err,
            ExprError::Invalid {
                violation: Violation::TorsionNeedsTheta,
                ..
            }
        ));
        let err = parse(RingId::Pt, "xi").unwrap_err();
        assert!(matches!(err, ExprError::AtomNotInRing { atom: Atom::Xi, .. }));
        assert!(parse(RingId::Pt, "theta^2").is_err());
        assert!(parse(RingId::Pt, "theta*a").is_err());
        assert!(parse(RingId::TildeTop, "a").is_err());
        assert!(parse(RingId::TildeMot, "theta").is_err());
        assert!(parse(RingId::Motivic, "theta*xi/tau_s*mu").is_err());
        assert!(parse(RingId::Motivic, "theta/tau_s").is_err());
        assert!(parse(RingId::Ec2Mot, "1/tau_s").is_err());
    }

    #[test]
    fn products_and_actions() {
        assert_eq!(
            multiply(RingId::Pt, "a", "theta/a^2").unwrap().canonical(),
            "theta/a"
        );
        assert!(multiply(RingId::Pt, "theta", "theta").unwrap().is_zero());
        assert_eq!(
            multiply(RingId::Motivic, "xi", "mu").unwrap().canonical(),
            "u^2"
        );
        assert_eq!(
            multiply(RingId::TildeTop, "u", "theta/u^2")
                .unwrap()
                .canonical(),
            "theta/u"
        );
        assert_eq!(
            multiply(RingId::TildeMot, "tau_s", "theta*mu/tau_s")
                .unwrap()
                .canonical(),
            "theta*mu"
        );
        assert!(matches!(
            multiply(RingId::TildeMot, "theta*mu/tau_s", "theta*mu"),
            Err(RingError::TorsionAction)
        ));
        let t = parse(RingId::TildeTop, "theta").unwrap();
        assert!(matches!(t.mul(&t), Err(RingError::NoProduct(..))));
    }

    #[test]
    fn realization_by_name() {
        let x = parse(RingId::Motivic, "xi*tau_s").unwrap();
        assert_eq!(x.realize().unwrap().canonical(), "u^2");
        let x = parse(RingId::Bc2, "tau*e1").unwrap();
        assert_eq!(x.realize().unwrap().canonical(), "x");
        assert!(parse(RingId::Pt, "a").unwrap().realize().is_err());
    }

    #[test]
    fn every_basis_element_round_trips_through_text() {
        let rings = [
            RingId::Pt,
            RingId::Ec2Top,
            RingId::TildeTop,
            RingId::B(2),
            RingId::Motivic,
            RingId::Ec2Mot,
            RingId::TildeMot,
            RingId::Bc2,
            RingId::CField,
            RingId::TopBc2,
        ];
        for ring in rings {
            for a in -5..=5 {
                for p in -5..=5 {
                    for b in -3..=3 {
                        for q in -3..=3 {
                            let d = MotDegree::from_ints(a, p, b, q);
                            for e in basis_at(ring, d) {
                                let text = e.canonical();
                                let back = parse(ring, &text).unwrap();
                                assert_eq!(back, e, "{ring} {text}");
                                assert_eq!(e.degree().unwrap(), Some(d));
                                let raw = parse_raw(&text).unwrap();
                                let r = raw.terms().next().unwrap();
                                assert_eq!(r.degree(), d, "{ring} {text}");
                            }
                        }
                    }
                }
            }
        }
    }
}
