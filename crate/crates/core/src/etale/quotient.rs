use std::sync::Arc;

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::group::QuotientWithSection;
use crate::scalars::Phase;

use super::{gamma_at, EtaleDatum};

/// The 3-cocycle ᾱ on H/F attached to an étale datum and a section s:
///
/// ᾱ(x,y,z) = α(s(x), s(y), s(y)⁻¹s(x)⁻¹s(xyz)) + γ(τ(y,z), τ(x,yz))
///          + γ(τ(y,z)τ(x,yz), τ′) + ε_{s(xyz)⁻¹s(x)s(y)}(τ(x,y)) + γ(τ′⁻¹, τ′)
///
/// with τ(y,z) = s(z)⁻¹s(y)⁻¹s(yz) and
/// τ′ = s(xyz)⁻¹s(x)s(y) τ(x,y)⁻¹ s(y)⁻¹s(x)⁻¹s(xyz).
pub fn quotient_cocycle(alpha: &Cochain, datum: &EtaleDatum, q: &QuotientWithSection) -> Result<Cochain> {
    let c = quotient_cochain(alpha, datum, q)?;
    if !c.is_cocycle() {
        return Err(Error::QuotientNotCocycle);
    }
    Ok(c)
}

/// The cochain of [`quotient_cocycle`] without the cocycle check.
pub(crate) fn quotient_cochain(alpha: &Cochain, datum: &EtaleDatum, q: &QuotientWithSection) -> Result<Cochain> {
    let g = alpha.group();
    let (f, eps) = (&datum.f, &datum.epsilon);
    let quot = &q.quotient;
    let m = quot.order();
    if q.projection.iter().filter(|p| p.is_some()).count() != datum.h.order() || m * f.order() != datum.h.order() {
        return Err(Error::InvalidDatum("quotient does not match H/F".into()));
    }
    let s = |x: usize| q.section[x];
    let inv = |x: usize| g.inv(x);
    let mul = |a: usize, b: usize| g.mul(a, b);
    let tau = |y: usize, z: usize| mul(mul(inv(s(z)), inv(s(y))), s(quot.mul(y, z)));
    let gam = |a: usize, b: usize| gamma_at(f, &datum.gamma, a, b);
    let mut values = vec![Phase::ZERO; m * m * m];
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                let xyz = quot.mul(quot.mul(x, y), z);
                let third = mul(mul(inv(s(y)), inv(s(x))), s(xyz));
                let k = mul(mul(inv(s(xyz)), s(x)), s(y));
                let txy = tau(x, y);
                let tp = mul(mul(k, inv(txy)), inv(k));
                let (t1, t2) = (tau(y, z), tau(x, quot.mul(y, z)));
                values[(x * m + y) * m + z] = alpha.at3(s(x), s(y), third)
                    + gam(t1, t2)
                    + gam(mul(t1, t2), tp)
                    + eps.get(k, txy)
                    + gam(inv(tp), tp);
            }
        }
    }
    Cochain::from_values(Arc::clone(quot), 3, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::{cohomology, solve_coboundary, EpsilonTable};
    use crate::etale::etale_enumerate;
    use crate::group::builtin::{builtin_group, dihedral};
    use crate::group::{quotient_with_section, Subgroup};

    fn shifted_section(q: &QuotientWithSection, f: &Subgroup, k: usize) -> QuotientWithSection {
        let g = f.parent();
        let z = f.elements()[k % f.order()];
        q.with_section(q.section.iter().map(|&x| if x == 0 { 0 } else { g.mul(x, z) }).collect()).unwrap()
    }

    #[test]
    fn cocycle_and_section_independence() {
        for spec in ["dihedral:3", "cyclic:4", "q8", "product:cyclic:2,cyclic:2"] {
            let g = Arc::new(builtin_group(&spec.parse().unwrap()).unwrap());
            for alpha in cohomology(&g, 3).unwrap().all_classes() {
                for d in etale_enumerate(&alpha).unwrap() {
                    let q = quotient_with_section(&d.h, &d.f).unwrap();
                    let c = quotient_cocycle(&alpha, &d, &q).unwrap();
                    for k in 1..d.f.order() {
                        let c2 = quotient_cocycle(&alpha, &d, &shifted_section(&q, &d.f, k)).unwrap();
                        assert!(solve_coboundary(&c2.sub(&c)).is_ok(), "{spec}");
                    }
                    if d.f == d.h {
                        assert_eq!(c.group().order(), 1);
                        assert!(c.is_zero());
                    }
                    if d.f.order() == 1 {
                        let res = alpha.restrict(&d.h);
                        let res = Cochain::from_values(c.group().clone(), 3, res.values().to_vec()).unwrap();
                        assert!(solve_coboundary(&c.sub(&res)).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn d3_over_c3() {
        let g = Arc::new(dihedral(3));
        let h = Subgroup::whole(g.clone());
        let f = Subgroup::generated(g.clone(), &[1]);
        assert_eq!(f.order(), 3);
        let d = EtaleDatum {
            h: h.clone(),
            f: f.clone(),
            gamma: Cochain::zero(f.table(), 2),
            epsilon: EpsilonTable::zero(h.clone(), f.clone()),
        };
        let alpha = Cochain::zero(g.clone(), 3);
        let q = quotient_with_section(&h, &f).unwrap();
        let c = quotient_cocycle(&alpha, &d, &q).unwrap();
        assert_eq!(c.group().order(), 2);
        assert!(solve_coboundary(&c).is_ok());
        let c2 = Subgroup::generated(g.clone(), &[3]);
        assert!(matches!(quotient_with_section(&h, &c2), Err(Error::NotNormal)));
    }
}
