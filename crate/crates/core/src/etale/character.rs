use crate::centre::{Centre, CentreCharacter};
use crate::error::{Error, Result};
use crate::Cyc;

use super::{gamma_at, LagrangianDatum};

/// χ_L(f,g) = Σ_{y∈Y} α(y⁻¹gy, y⁻¹|f) / α(y⁻¹, g|f) · γ(u,h) / γ(h,u) with
/// h = y⁻¹fy, u = y⁻¹gy, and Y a set of representatives of the cosets yH
/// with h, u ∈ H.
pub fn lagrangian_character(centre: &Centre, datum: &LagrangianDatum) -> Result<CentreCharacter> {
    lagrangian_character_with(centre, datum, |coset| coset[0])
}

/// As [`lagrangian_character`], with `pick` choosing the representative of
/// each coset (given as its sorted element list).
pub fn lagrangian_character_with(
    centre: &Centre,
    datum: &LagrangianDatum,
    pick: impl Fn(&[usize]) -> usize + Sync,
) -> Result<CentreCharacter> {
    induced(centre, datum, 1, pick)
}

/// `orientation` 1 uses γ(u,h) − γ(h,u), −1 the reverse.
pub(crate) fn induced(
    centre: &Centre,
    datum: &LagrangianDatum,
    orientation: i64,
    pick: impl Fn(&[usize]) -> usize + Sync,
) -> Result<CentreCharacter> {
    let g = centre.group();
    if datum.h.parent().as_ref() != g.as_ref() {
        return Err(Error::MismatchedContext);
    }
    let h = &datum.h;
    let n = g.order();
    let t = centre.transgressions();
    let cosets: Vec<Vec<usize>> = {
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for y in 0..n {
            if seen[y] {
                continue;
            }
            let mut c: Vec<usize> = h.elements().iter().map(|&k| g.mul(y, k)).collect();
            c.sort_unstable();
            for &z in &c {
                seen[z] = true;
            }
            out.push(c);
        }
        out
    };
    let reps: Vec<usize> = cosets.iter().map(|c| pick(c)).collect();
    for (c, r) in cosets.iter().zip(&reps) {
        if c.binary_search(r).is_err() {
            return Err(Error::InvalidDatum("coset representative outside its coset".into()));
        }
    }
    Ok(centre.character_from_fn(|f, x| {
        let mut s = Cyc::zero(1);
        for &y in &reps {
            let yi = g.inv(y);
            let (hh, u) = (g.conj(yi, f), g.conj(yi, x));
            if !h.contains(hh) || !h.contains(u) {
                continue;
            }
            let gam = gamma_at(h, &datum.gamma, u, hh) - gamma_at(h, &datum.gamma, hh, u);
            let phase = t.right(u, yi, f) - t.right(yi, x, f) + gam.scale(orientation);
            s = &s + &Cyc::one(1).mul_phase(phase);
        }
        s
    }))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;
    use crate::cochain::{theta_d3, Cochain};
    use crate::etale::lagrangian_data;
    use crate::group::builtin::{builtin_group, dihedral};
    use crate::scalars::Phase;

    fn row(c: &Centre, chi: &CentreCharacter) -> Vec<Cyc> {
        c.display_pairs().iter().map(|&(f, x)| chi.get(f, x)).collect()
    }

    fn ints(v: &[i64]) -> Vec<Cyc> {
        v.iter().map(|&k| Cyc::from_int(k, 1)).collect()
    }

    #[test]
    fn d3_untwisted() {
        let g = Arc::new(dihedral(3));
        let c = Centre::new(&Cochain::zero(g.clone(), 3)).unwrap();
        let data = lagrangian_data(c.alpha()).unwrap();
        let rows: Vec<Vec<Cyc>> = data.iter().map(|d| row(&c, &lagrangian_character(&c, d).unwrap())).collect();
        assert_eq!(rows[0], ints(&[6, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(rows[1], ints(&[3, 0, 1, 0, 0, 0, 1, 1]));
        assert_eq!(rows[2], ints(&[2, 2, 0, 2, 2, 2, 0, 0]));
        assert_eq!(rows[3], ints(&[1; 8]));
        let dec: Vec<Vec<u64>> =
            data.iter().map(|d| c.decompose(&lagrangian_character(&c, d).unwrap()).unwrap()).collect();
        assert_eq!(dec[0], vec![1, 1, 2, 0, 0, 0, 0, 0]);
        assert_eq!(dec[1], vec![1, 0, 1, 0, 0, 0, 1, 0]);
        assert_eq!(dec[2], vec![1, 1, 0, 2, 0, 0, 0, 0]);
        assert_eq!(dec[3], vec![1, 0, 0, 1, 0, 0, 1, 0]);
    }

    /// With α = d(β) for an asymmetric β, only one orientation of the
    /// γ-ratio gives genuine characters on nonabelian subgroups.
    #[test]
    fn gamma_orientation() {
        for spec in ["dihedral:3", "q8", "product:cyclic:3,cyclic:3"] {
            let g = Arc::new(builtin_group(&spec.parse().unwrap()).unwrap());
            let beta = Cochain::from_fn(g.clone(), 2, |a| Phase::new(((a[0] * 7 + a[1] * a[1] * 3 + a[0] * a[1]) % 12) as i64, 12));
            let alpha = beta.differential().unwrap();
            let c = Centre::new(&alpha).unwrap();
            let mut ok = [0usize; 2];
            let data = lagrangian_data(&alpha).unwrap();
            for d in &data {
                for (slot, o) in [(0usize, 1i64), (1, -1)] {
                    let chi = induced(&c, d, o, |c| c[0]).unwrap();
                    if c.is_class_function(&chi) && c.decompose(&chi).is_ok() {
                        ok[slot] += 1;
                    }
                }
            }
            assert_eq!(ok[0], data.len(), "{spec}");
            assert!(ok[1] < data.len(), "{spec}");
        }
    }

    #[test]
    fn unit_multiplicity_and_dimension() {
        let g = Arc::new(dihedral(3));
        for k in 0..6 {
            let c = Centre::new(&theta_d3(&g, k)).unwrap();
            for d in lagrangian_data(c.alpha()).unwrap() {
                let chi = lagrangian_character(&c, &d).unwrap();
                assert!(c.is_class_function(&chi));
                let one = BigRational::from_integer(BigInt::from(1));
                assert_eq!(c.scalar_product(&c.simple_characters()[0], &chi).unwrap(), one);
                assert_eq!(c.dimension(&chi).unwrap(), 6);
                assert_eq!(chi.get(0, 0), Cyc::from_int((6 / d.h.order()) as i64, 1));
            }
        }
    }
}
