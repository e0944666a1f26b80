//! The double complex C^{p,q}(G, G, ℚ/ℤ) with G acting on itself by
//! conjugation, used to validate the splitting (α₂, α₁, α) of a 3-cocycle.

use rayon::prelude::*;

use crate::group::GroupTable;
use crate::scalars::Phase;

use super::transgression::Transgressions;
use super::Cochain;

type Double<'a> = dyn Fn(&[usize], &[usize]) -> Phase + Sync + 'a;

fn sign(i: usize, v: Phase) -> Phase {
    if i.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

fn merge(xs: &[usize], i: usize, g: &GroupTable) -> Vec<usize> {
    let mut out = Vec::with_capacity(xs.len() - 1);
    out.extend_from_slice(&xs[..i]);
    out.push(g.mul(xs[i], xs[i + 1]));
    out.extend_from_slice(&xs[i + 2..]);
    out
}

/// Vertical differential ∂ (bar differential in the g-variables).
fn vertical(c: &Double, g: &GroupTable, fs: &[usize], gs: &[usize]) -> Phase {
    let q = gs.len() - 1;
    let mut total = c(fs, &gs[1..]);
    for i in 1..=q {
        total += sign(i, c(fs, &merge(gs, i - 1, g)));
    }
    total + sign(q + 1, c(fs, &gs[..q]))
}

/// Horizontal differential d; the last f acts on the g-variables by conjugation.
fn horizontal(c: &Double, g: &GroupTable, fs: &[usize], gs: &[usize]) -> Phase {
    let p = fs.len() - 1;
    let mut total = c(&fs[1..], gs);
    for i in 1..=p {
        total += sign(i, c(&merge(fs, i - 1, g), gs));
    }
    let last = fs[p];
    let moved: Vec<usize> = gs.iter().map(|&x| g.conj(last, x)).collect();
    total + sign(p + 1, c(&fs[..p], &moved))
}

fn all_tuples(n: usize, len: usize) -> impl ParallelIterator<Item = Vec<usize>> {
    (0..n.pow(len as u32)).into_par_iter().map(move |mut idx| {
        let mut v = vec![0; len];
        for i in (0..len).rev() {
            v[i] = idx % n;
            idx /= n;
        }
        v
    })
}

/// Checks d(γ) = 0, ∂γ = dβ, ∂β = dα, ∂α = 0 for γ = α(·,·|·), β = α(·|·,·).
pub fn hs_check(alpha: &Cochain) -> bool {
    let g = alpha.group().as_ref();
    let n = g.order();
    let t = Transgressions::new(alpha);
    let gamma = |fs: &[usize], gs: &[usize]| t.right(fs[0], fs[1], gs[0]);
    let beta = |fs: &[usize], gs: &[usize]| t.left(fs[0], gs[0], gs[1]);
    let alp = |_: &[usize], gs: &[usize]| alpha.at3(gs[0], gs[1], gs[2]);
    let c1 = all_tuples(n, 4).all(|x| horizontal(&gamma, g, &x[..3], &x[3..]).is_zero());
    let c2 = all_tuples(n, 4)
        .all(|x| vertical(&gamma, g, &x[..2], &x[2..]) == horizontal(&beta, g, &x[..2], &x[2..]));
    let c3 = all_tuples(n, 4)
        .all(|x| vertical(&beta, g, &x[..1], &x[1..]) == horizontal(&alp, g, &x[..1], &x[1..]));
    let c4 = all_tuples(n, 4).all(|x| vertical(&alp, g, &[], &x).is_zero());
    c1 && c2 && c3 && c4
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::theta_d3;
    use crate::group::builtin::{dihedral, quaternion8};
    use std::sync::Arc;

    #[test]
    fn theta_passes() {
        let g = Arc::new(dihedral(3));
        assert!(hs_check(&Cochain::zero(g.clone(), 3)));
        for k in 1..6 {
            assert!(hs_check(&theta_d3(&g, k)), "k = {k}");
        }
        let mut bad = theta_d3(&g, 1);
        bad.set(&[4, 4, 1], Phase::new(1, 7));
        assert!(!hs_check(&bad));
    }

    #[test]
    fn coboundary_on_q8() {
        let g = Arc::new(quaternion8());
        let c = Cochain::from_fn(g.clone(), 2, |a| Phase::new((a[0] * 3 + a[1]) as i64, 4));
        assert!(hs_check(&c.differential().unwrap()));
    }
}
