//! Étale and Lagrangian algebras in Z(G, α): data, validation, characters
//! and the quotient cocycle on H/F.
//!
//! Cochains γ on a subgroup are stored on the subgroup's local table.

mod character;
mod enumerate;
mod quotient;
mod validate;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cochain::{cohomology, solve_coboundary, Cochain, CochainEntry, EpsilonEntry, EpsilonTable, Transgressions};
use crate::error::{Error, Result};
use crate::group::{all_subgroups, GroupTable, Subgroup, DEFAULT_SUBGROUP_BOUND};
use crate::scalars::Phase;

pub use character::{lagrangian_character, lagrangian_character_with};
pub use enumerate::etale_enumerate;
pub use quotient::quotient_cocycle;
pub use validate::{validate_etale, EtaleReport};

/// γ(a, b) for parent indices a, b of `sub`.
pub fn gamma_at(sub: &Subgroup, gamma: &Cochain, a: usize, b: usize) -> Phase {
    gamma.at2(sub.local_index(a).expect("a in subgroup"), sub.local_index(b).expect("b in subgroup"))
}

/// L(H, γ) with d(γ) = α|_H.
#[derive(Clone, Debug, PartialEq)]
pub struct LagrangianDatum {
    pub h: Subgroup,
    pub gamma: Cochain,
}

/// A(H, F, γ, ε): F ⊴ H, d(γ) = α|_F, ε_h(f) for h ∈ H, f ∈ F.
#[derive(Clone, Debug, PartialEq)]
pub struct EtaleDatum {
    pub h: Subgroup,
    pub f: Subgroup,
    pub gamma: Cochain,
    pub epsilon: EpsilonTable,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct LagrangianOptions {
    /// Also identify γ-classes related by conjugation with N_G(H).
    pub normalizer: bool,
    pub subgroup_bound: usize,
}

impl LagrangianOptions {
    pub fn new() -> Self {
        LagrangianOptions { normalizer: false, subgroup_bound: DEFAULT_SUBGROUP_BOUND }
    }
}

fn check_alpha(alpha: &Cochain) -> Result<()> {
    if alpha.degree() != 3 {
        return Err(Error::DegreeUnsupported(alpha.degree()));
    }
    if !alpha.is_cocycle() {
        return Err(Error::NotACocycle);
    }
    Ok(())
}

/// Conjugacy representatives H with α|_H a coboundary, each with one witness.
pub fn admissible_subgroups(alpha: &Cochain) -> Result<Vec<(Subgroup, Cochain)>> {
    admissible_subgroups_bounded(alpha, DEFAULT_SUBGROUP_BOUND)
}

pub fn admissible_subgroups_bounded(alpha: &Cochain, bound: usize) -> Result<Vec<(Subgroup, Cochain)>> {
    check_alpha(alpha)?;
    let mut out = Vec::new();
    for h in all_subgroups(alpha.group(), bound)? {
        match solve_coboundary(&alpha.restrict(&h)) {
            Ok(w) => out.push((h, w)),
            Err(Error::NotACoboundary) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Every witness class on `sub`: `base` plus each class of H²(sub, ℚ/ℤ).
pub(crate) fn witness_classes(sub: &Subgroup, base: &Cochain) -> Result<Vec<Cochain>> {
    let h2 = cohomology(&sub.table(), 2)?;
    if h2.invariants.is_empty() {
        return Ok(vec![base.clone()]);
    }
    Ok(h2.all_classes().into_iter().map(|c| base.add(&c)).collect())
}

/// All L(H, γ) up to conjugacy of H and coboundaries of γ.
pub fn lagrangian_data(alpha: &Cochain) -> Result<Vec<LagrangianDatum>> {
    lagrangian_data_with(alpha, LagrangianOptions::new())
}

pub fn lagrangian_data_with(alpha: &Cochain, opts: LagrangianOptions) -> Result<Vec<LagrangianDatum>> {
    let mut out = Vec::new();
    let trans = if opts.normalizer { Some(Transgressions::new(alpha)) } else { None };
    for (h, base) in admissible_subgroups_bounded(alpha, opts.subgroup_bound)? {
        let mut kept: Vec<Cochain> = Vec::new();
        for gamma in witness_classes(&h, &base)? {
            if let Some(t) = &trans {
                let datum = LagrangianDatum { h: h.clone(), gamma: gamma.clone() };
                let seen = h.normalizer().elements().iter().any(|&x| {
                    let moved = transport_with(t, &datum, x);
                    kept.iter().any(|k| solve_coboundary_2(&moved.gamma.sub(k)))
                });
                if seen {
                    continue;
                }
            }
            kept.push(gamma);
        }
        out.extend(kept.into_iter().map(|gamma| LagrangianDatum { h: h.clone(), gamma }));
    }
    Ok(out)
}

fn solve_coboundary_2(c: &Cochain) -> bool {
    c.is_zero() || solve_coboundary(c).is_ok()
}

/// The datum conjugated by x: H' = xHx⁻¹ and γ'(xax⁻¹, xbx⁻¹) = γ(a,b) − α(x|a,b).
pub fn transport(alpha: &Cochain, datum: &LagrangianDatum, x: usize) -> LagrangianDatum {
    transport_with(&Transgressions::new(alpha), datum, x)
}

pub(crate) fn transport_with(t: &Transgressions, datum: &LagrangianDatum, x: usize) -> LagrangianDatum {
    let h = &datum.h;
    let g = h.parent();
    let h2 = h.conjugate(x);
    let els = h2.elements().to_vec();
    let xi = g.inv(x);
    let gamma = Cochain::from_fn(h2.table(), 2, |a| {
        let (p, q) = (g.conj(xi, els[a[0]]), g.conj(xi, els[a[1]]));
        gamma_at(h, &datum.gamma, p, q) - t.left(x, p, q)
    });
    LagrangianDatum { h: h2, gamma }
}

/// ε_f(g) = γ(f,g) − γ(fgf⁻¹, f) on H × H.
pub fn epsilon_from_gamma(h: &Subgroup, gamma: &Cochain) -> EpsilonTable {
    let g = h.parent().clone();
    EpsilonTable::from_fn(h.clone(), h.clone(), |a, b| gamma_at(h, gamma, a, b) - gamma_at(h, gamma, g.conj(a, b), a))
}

impl LagrangianDatum {
    /// The same algebra as an étale datum with F = H.
    pub fn to_etale(&self) -> EtaleDatum {
        EtaleDatum {
            h: self.h.clone(),
            f: self.h.clone(),
            gamma: self.gamma.clone(),
            epsilon: epsilon_from_gamma(&self.h, &self.gamma),
        }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        self.h.parent()
    }
}

/// `{"H": [...], "F": [...], "gamma": [...], "epsilon": [...]}` with parent indices.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DatumJson {
    #[serde(rename = "H")]
    pub h: Vec<usize>,
    #[serde(rename = "F")]
    pub f: Vec<usize>,
    pub gamma: Vec<CochainEntry>,
    #[serde(default)]
    pub epsilon: Vec<EpsilonEntry>,
}

fn gamma_entries(sub: &Subgroup, gamma: &Cochain) -> Vec<CochainEntry> {
    let els = sub.elements();
    gamma
        .to_json()
        .values
        .into_iter()
        .map(|e| CochainEntry { args: e.args.iter().map(|&a| els[a]).collect(), phase: e.phase })
        .collect()
}

fn gamma_from_entries(sub: &Subgroup, entries: &[CochainEntry]) -> Result<Cochain> {
    let mut c = Cochain::zero(sub.table(), 2);
    for e in entries {
        let local: Option<Vec<usize>> = e.args.iter().map(|&a| sub.local_index(a)).collect();
        match local {
            Some(l) if l.len() == 2 => c.set(&l, e.phase),
            _ => return Err(Error::Parse(format!("gamma entry {:?} outside the subgroup", e.args))),
        }
    }
    Ok(c)
}

impl EtaleDatum {
    pub fn to_json(&self) -> DatumJson {
        DatumJson {
            h: self.h.elements().to_vec(),
            f: self.f.elements().to_vec(),
            gamma: gamma_entries(&self.f, &self.gamma),
            epsilon: self.epsilon.to_json(),
        }
    }

    pub fn from_json(group: &Arc<GroupTable>, j: &DatumJson) -> Result<Self> {
        let h = Subgroup::new(group.clone(), j.h.clone())?;
        let f = Subgroup::new(group.clone(), j.f.clone())?;
        if !f.is_subgroup_of(&h) {
            return Err(Error::NotASubgroup);
        }
        let gamma = gamma_from_entries(&f, &j.gamma)?;
        let epsilon = EpsilonTable::from_json(h.clone(), f.clone(), &j.epsilon)?;
        Ok(EtaleDatum { h, f, gamma, epsilon })
    }
}

impl LagrangianDatum {
    pub fn to_json(&self) -> DatumJson {
        DatumJson {
            h: self.h.elements().to_vec(),
            f: self.h.elements().to_vec(),
            gamma: gamma_entries(&self.h, &self.gamma),
            epsilon: Vec::new(),
        }
    }

    pub fn from_json(group: &Arc<GroupTable>, j: &DatumJson) -> Result<Self> {
        let h = Subgroup::new(group.clone(), j.h.clone())?;
        let gamma = gamma_from_entries(&h, &j.gamma)?;
        Ok(LagrangianDatum { h, gamma })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::theta_d3;
    use crate::group::builtin::{builtin_group, dihedral};

    fn orders(v: &[(Subgroup, Cochain)]) -> Vec<usize> {
        v.iter().map(|(h, _)| h.order()).collect()
    }

    #[test]
    fn admissible_d3() {
        let g = Arc::new(dihedral(3));
        assert_eq!(orders(&admissible_subgroups(&theta_d3(&g, 0)).unwrap()), vec![1, 2, 3, 6]);
        assert_eq!(orders(&admissible_subgroups(&theta_d3(&g, 3)).unwrap()), vec![1, 3]);
        assert_eq!(orders(&admissible_subgroups(&theta_d3(&g, 2)).unwrap()), vec![1, 2]);
        assert_eq!(orders(&admissible_subgroups(&theta_d3(&g, 4)).unwrap()), vec![1, 2]);
        assert_eq!(orders(&admissible_subgroups(&theta_d3(&g, 1)).unwrap()), vec![1]);
        for (h, w) in admissible_subgroups(&theta_d3(&g, 3)).unwrap() {
            assert_eq!(w.differential().unwrap(), theta_d3(&g, 3).restrict(&h));
        }
    }

    #[test]
    fn lagrangian_counts() {
        let g = Arc::new(dihedral(3));
        assert_eq!(lagrangian_data(&theta_d3(&g, 0)).unwrap().len(), 4);
        assert_eq!(lagrangian_data(&theta_d3(&g, 1)).unwrap().len(), 1);
        let k = Arc::new(builtin_group(&"product:cyclic:2,cyclic:2".parse().unwrap()).unwrap());
        let data = lagrangian_data(&Cochain::zero(k.clone(), 3)).unwrap();
        assert_eq!(data.iter().filter(|d| d.h.order() == 4).count(), 2);
    }

    #[test]
    fn transport_is_a_witness() {
        let g = Arc::new(dihedral(3));
        let alpha = theta_d3(&g, 3);
        let data = lagrangian_data(&alpha).unwrap();
        for d in &data {
            for x in 0..6 {
                let t = transport(&alpha, d, x);
                assert_eq!(t.gamma.differential().unwrap(), alpha.restrict(&t.h), "x = {x}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let g = Arc::new(dihedral(3));
        let alpha = theta_d3(&g, 3);
        for d in lagrangian_data(&alpha).unwrap() {
            let e = d.to_etale();
            let j = e.to_json();
            let text = serde_json::to_string(&j).unwrap();
            let back: DatumJson = serde_json::from_str(&text).unwrap();
            assert_eq!(EtaleDatum::from_json(&g, &back).unwrap(), e);
            assert_eq!(LagrangianDatum::from_json(&g, &d.to_json()).unwrap(), d);
        }
    }
}
