//! Betti realization from each motivic object to its topological counterpart.
//!
//! On generators: Re(τ_σ) = Re(μ) = 1, Re(ξ) = u², Re(e₁) = x, Re(τ) = 1.

use crate::motivic::{
    Bc2Elem, Bc2Mono, Ec2MotElem, Ec2MotMono, MotElem, MotMono, TildeMotElem, TildeMotMono,
};
use crate::point::{
    localize_mono, negative_cone_image, Ec2TopElem, Ec2TopMono, PtElem, PtMono, TildeTopElem,
    TildeTopMono, TopBc2Elem, TopBc2Mono,
};

/// H^{★,★}_{C₂}(ℂ) → M. Torsion goes through B_i → M.
pub fn re_point_mono(x: &MotMono) -> Option<PtMono> {
    match x {
        MotMono::Free(f) => f.x().times_u(2 * f.e()),
        MotMono::Tor(t) => negative_cone_image(t.m(), t.n()),
    }
}

pub fn re_point(x: &MotElem) -> PtElem {
    x.map_linear(re_point_mono)
}

/// M[ξ^{±1}, τ_σ] → ℤ/2[a, u^{±1}].
pub fn re_ec2_mono(x: &Ec2MotMono) -> Option<Ec2TopMono> {
    let l = localize_mono(&x.x)?;
    Some(Ec2TopMono {
        m: l.m,
        n: l.n + 2 * x.e,
    })
}

pub fn re_ec2(x: &Ec2MotElem) -> Ec2TopElem {
    x.map_linear(re_ec2_mono)
}

/// Forgets the μ^i τ_σ^j label.
pub fn re_tilde_mono(x: &TildeMotMono) -> TildeTopMono {
    TildeTopMono { m: x.m(), n: x.n() }
}

pub fn re_tilde(x: &TildeMotElem) -> TildeTopElem {
    x.map_linear(|t| Some(re_tilde_mono(t)))
}

/// τ ↦ 1, e₁ ↦ x, e₂ ↦ x².
pub fn re_bc2_mono(x: &Bc2Mono) -> TopBc2Mono {
    TopBc2Mono {
        k: x.e1_exp() + 2 * x.e2_exp(),
    }
}

pub fn re_bc2(x: &Bc2Elem) -> TopBc2Elem {
    x.map_linear(|m| Some(re_bc2_mono(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::{F2Sum, Monomial};
    use crate::motivic::{FreeMono, TorMono};

    fn free(x: PtMono, e: u32, f: u32, g: u32) -> MotMono {
        MotMono::Free(FreeMono::reduce(x, e, f, g).unwrap())
    }

    #[test]
    fn generator_values() {
        assert_eq!(re_point_mono(&free(PtMono::ONE, 0, 1, 0)), Some(PtMono::ONE));
        assert_eq!(re_point_mono(&free(PtMono::ONE, 0, 0, 1)), Some(PtMono::ONE));
        assert_eq!(
            re_point_mono(&free(PtMono::ONE, 1, 0, 0)),
            Some(PtMono::Pos { m: 0, n: 2 })
        );
        let t = MotMono::Tor(TorMono::new(1, 1, 0, 1).unwrap());
        assert_eq!(re_point_mono(&t), Some(PtMono::Neg { m: 0, n: 1 }));
    }

    #[test]
    fn ec2_values() {
        let xi_inv = Ec2MotMono {
            x: PtMono::ONE,
            e: -1,
            f: 0,
        };
        assert_eq!(re_ec2_mono(&xi_inv), Some(Ec2TopMono { m: 0, n: -2 }));
        let theta_xi_tau = Ec2MotMono {
            x: PtMono::THETA,
            e: 1,
            f: 1,
        };
        assert_eq!(re_ec2_mono(&theta_xi_tau), None);
        let a = Ec2MotMono {
            x: PtMono::A,
            e: 0,
            f: 0,
        };
        assert_eq!(re_ec2_mono(&a), Some(Ec2TopMono { m: 1, n: 0 }));
    }

    #[test]
    fn tilde_values() {
        let x = TildeMotMono::new(1, 0, 2, 0).unwrap();
        assert_eq!(re_tilde_mono(&x), TildeTopMono { m: 2, n: 0 });
        let y = TildeMotMono::new(3, 5, -1, 4).unwrap();
        assert_eq!(re_tilde_mono(&y), TildeTopMono { m: -1, n: 4 });
        assert!(re_tilde(&F2Sum::zero()).is_zero());
    }

    #[test]
    fn bc2_values() {
        assert_eq!(re_bc2_mono(&Bc2Mono::reduce(0, 1, 0)), TopBc2Mono { k: 1 });
        assert_eq!(re_bc2_mono(&Bc2Mono::reduce(4, 0, 0)), TopBc2Mono { k: 0 });
        assert_eq!(re_bc2_mono(&Bc2Mono::reduce(0, 0, 1)), TopBc2Mono { k: 2 });
    }

    #[test]
    fn realization_is_multiplicative_on_small_monomials() {
        let mut monos = Vec::new();
        for m in 0..4 {
            for n in 0..4 {
                for x in [PtMono::Pos { m, n }, PtMono::Neg { m, n }] {
                    for e in 0..3 {
                        for f in 0..3 {
                            for g in 0..3 {
                                if let Some(fm) = FreeMono::reduce(x, e, f, g) {
                                    monos.push(MotMono::Free(fm));
                                }
                            }
                        }
                    }
                }
            }
        }
        for i in 1..3 {
            for j in 1..3 {
                for m in -3..3 {
                    for n in 0..2 * i {
                        monos.push(MotMono::Tor(TorMono::new(i, j, m, n).unwrap()));
                    }
                }
            }
        }
        for x in &monos {
            for y in &monos {
                let lhs = x.mul(y).and_then(|xy| re_point_mono(&xy));
                let rhs = match (re_point_mono(x), re_point_mono(y)) {
                    (Some(a), Some(b)) => a.mul(&b),
                    _ => None,
                };
                assert_eq!(lhs, rhs, "{x:?} * {y:?}");
            }
        }
    }
}
