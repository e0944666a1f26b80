use std::collections::BTreeSet;

use crate::cochain::{cohomology, solve_coboundary, Cochain, EpsilonTable, Transgressions};
use crate::error::{Error, Result};
use crate::group::{all_subgroups, normal_subgroups_of, Subgroup, DEFAULT_SUBGROUP_BOUND};
use crate::linalg::{normalize_row, Reduced, SparseRow};
use crate::scalars::Phase;

use super::{check_alpha, gamma_at, validate_etale, witness_classes, EtaleDatum};

/// Bound on |G| for the full enumeration.
pub const ETALE_BOUND: usize = 32;

/// Every A(H, F, γ, ε): H up to conjugacy, F ⊴ H, γ up to coboundary and ε up
/// to the residual gauge ε_h(f) ↦ ε_h(f) + c(hfh⁻¹) − c(f), c ∈ Hom(F, ℚ/ℤ).
pub fn etale_enumerate(alpha: &Cochain) -> Result<Vec<EtaleDatum>> {
    check_alpha(alpha)?;
    let g = alpha.group();
    if g.order() > ETALE_BOUND {
        return Err(Error::SizeLimitExceeded { what: "group order", size: g.order(), limit: ETALE_BOUND });
    }
    let t = Transgressions::new(alpha);
    let mut out = Vec::new();
    for h in all_subgroups(g, DEFAULT_SUBGROUP_BOUND)? {
        for f in normal_subgroups_of(&h) {
            let base = match solve_coboundary(&alpha.restrict(&f)) {
                Ok(w) => w,
                Err(Error::NotACoboundary) => continue,
                Err(e) => return Err(e),
            };
            for gamma in witness_classes(&f, &base)? {
                for eps in epsilon_solutions(&t, &h, &f, &gamma)? {
                    let datum = EtaleDatum { h: h.clone(), f: f.clone(), gamma: gamma.clone(), epsilon: eps };
                    let report = validate_etale(alpha, &datum)?;
                    if !report.is_valid() {
                        return Err(Error::InvalidDatum(report.failures.join("; ")));
                    }
                    out.push(datum);
                }
            }
        }
    }
    Ok(out)
}

/// Solutions ε of the linear constraints for fixed (H, F, γ), one per gauge orbit.
fn epsilon_solutions(t: &Transgressions, h: &Subgroup, f: &Subgroup, gamma: &Cochain) -> Result<Vec<EpsilonTable>> {
    let g = h.parent();
    let nf = f.order();
    let col = |x: usize, y: usize| h.local_index(x).unwrap() * nf + f.local_index(y).unwrap();
    let gam = |a: usize, b: usize| gamma_at(f, gamma, a, b);
    let mut rows: Vec<(SparseRow, Phase)> = Vec::new();
    for &x in h.elements() {
        for &y in h.elements() {
            for &z in f.elements() {
                let r = vec![(col(g.mul(x, y), z), 1), (col(y, z), -1), (col(x, g.conj(y, z)), -1)];
                rows.push((normalize_row(r), t.right(x, y, z)));
            }
        }
        for &a in f.elements() {
            for &b in f.elements() {
                let r = vec![(col(x, g.mul(a, b)), 1), (col(x, a), -1), (col(x, b), -1)];
                let rhs = t.left(x, a, b) + gam(g.conj(x, a), g.conj(x, b)) - gam(a, b);
                rows.push((normalize_row(r), rhs));
            }
        }
    }
    for &a in f.elements() {
        for &b in f.elements() {
            rows.push((normalize_row(vec![(col(a, b), 1)]), gam(a, b) - gam(g.conj(a, b), a)));
        }
    }
    let ncols = h.order() * nf;
    let red = Reduced::new(ncols, rows)?;
    let Some(p) = red.particular() else { return Ok(Vec::new()) };
    let kernel = red.kernel_modulo(&[])?.elements(ncols);
    let homs: Vec<Cochain> = {
        let h1 = cohomology(&f.table(), 1)?;
        let mut all = h1.all_classes();
        if all.is_empty() {
            all.push(Cochain::zero(f.table(), 1));
        }
        all
    };
    let shifts: Vec<Vec<Phase>> = homs
        .iter()
        .map(|c| {
            let mut v = vec![Phase::ZERO; ncols];
            for &x in h.elements() {
                for &y in f.elements() {
                    let cy = c.at1(f.local_index(y).unwrap());
                    let cz = c.at1(f.local_index(g.conj(x, y)).unwrap());
                    v[col(x, y)] = cz - cy;
                }
            }
            v
        })
        .collect();
    let mut seen = BTreeSet::new();
    for k in kernel {
        let v: Vec<Phase> = p.iter().zip(&k).map(|(a, b)| *a + *b).collect();
        let canon = shifts
            .iter()
            .map(|s| v.iter().zip(s).map(|(a, b)| *a + *b).collect::<Vec<Phase>>())
            .min()
            .unwrap();
        seen.insert(canon);
    }
    Ok(seen
        .into_iter()
        .map(|v| EpsilonTable::from_fn(h.clone(), f.clone(), |x, y| v[col(x, y)]))
        .collect())
}
