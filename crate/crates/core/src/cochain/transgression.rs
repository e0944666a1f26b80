use rayon::prelude::*;

use crate::scalars::Phase;

use super::Cochain;

/// α(f,g|h) = −α(f,g,h) + α(f, ᵍh, g) − α(ᶠᵍh, f, g).
pub fn transgression_right(alpha: &Cochain, f: usize, g: usize, h: usize) -> Phase {
    let grp = alpha.group();
    let gh = grp.conj(g, h);
    let fgh = grp.conj(grp.mul(f, g), h);
    -alpha.at3(f, g, h) + alpha.at3(f, gh, g) - alpha.at3(fgh, f, g)
}

/// α(f|g,h) = α(f,g,h) − α(ᶠg, f, h) + α(ᶠg, ᶠh, f).
pub fn transgression_left(alpha: &Cochain, f: usize, g: usize, h: usize) -> Phase {
    let grp = alpha.group();
    let fg = grp.conj(f, g);
    let fh = grp.conj(f, h);
    alpha.at3(f, g, h) - alpha.at3(fg, f, h) + alpha.at3(fg, fh, f)
}

/// Both transgression components tabulated over G³.
#[derive(Clone, Debug)]
pub struct Transgressions {
    n: usize,
    right: Vec<Phase>,
    left: Vec<Phase>,
}

impl Transgressions {
    pub fn new(alpha: &Cochain) -> Self {
        let n = alpha.group().order();
        let tab = |f: fn(&Cochain, usize, usize, usize) -> Phase| -> Vec<Phase> {
            (0..n * n * n)
                .into_par_iter()
                .map(|i| f(alpha, i / (n * n), (i / n) % n, i % n))
                .collect()
        };
        Transgressions { n, right: tab(transgression_right), left: tab(transgression_left) }
    }

    /// α(f,g|h).
    #[inline]
    pub fn right(&self, f: usize, g: usize, h: usize) -> Phase {
        self.right[(f * self.n + g) * self.n + h]
    }

    /// α(f|g,h).
    #[inline]
    pub fn left(&self, f: usize, g: usize, h: usize) -> Phase {
        self.left[(f * self.n + g) * self.n + h]
    }
}

/// The three identities relating α(·,·|·), α(·|·,·) and α, over all tuples.
pub fn check_pca_identities(alpha: &Cochain) -> bool {
    let g = alpha.group();
    let n = g.order();
    let t = Transgressions::new(alpha);
    (0..n * n * n * n).into_par_iter().all(|i| {
        let (f, x, h, u) = (i / (n * n * n), (i / (n * n)) % n, (i / n) % n, i % n);
        // α(f,gh|u) α(g,h|u) = α(fg,h|u) α(f,g|huh⁻¹)   with g := x
        let gx = x;
        let one = t.right(f, g.mul(gx, h), u) + t.right(gx, h, u)
            == t.right(g.mul(f, gx), h, u) + t.right(f, gx, g.conj(h, u));
        // α(fg|u,v) α(f,g|u) α(f,g|v) = α(f,g|uv) α(g|u,v) α(f|ᵍu,ᵍv)   with g := x, u := h, v := u
        let (uu, vv) = (h, u);
        let two = t.left(g.mul(f, gx), uu, vv) + t.right(f, gx, uu) + t.right(f, gx, vv)
            == t.right(f, gx, g.mul(uu, vv)) + t.left(gx, uu, vv) + t.left(f, g.conj(gx, uu), g.conj(gx, vv));
        // α(g,h,u) α(f|gh,u) α(f|g,h) = α(f|g,hu) α(f|h,u) α(ᶠg,ᶠh,ᶠu)
        let three = alpha.at3(gx, h, u) + t.left(f, g.mul(gx, h), u) + t.left(f, gx, h)
            == t.left(f, gx, g.mul(h, u)) + t.left(f, h, u) + alpha.at3(g.conj(f, gx), g.conj(f, h), g.conj(f, u));
        one && two && three
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::theta_d3;
    use crate::group::builtin::dihedral;
    use std::sync::Arc;

    #[test]
    fn identities_for_theta() {
        let g = Arc::new(dihedral(3));
        for k in 0..6 {
            assert!(check_pca_identities(&theta_d3(&g, k)));
        }
        let mut bad = theta_d3(&g, 1);
        bad.set(&[1, 1, 3], Phase::new(1, 5));
        assert!(!bad.is_cocycle());
        assert!(!check_pca_identities(&bad));
    }

    #[test]
    fn normalization() {
        let g = Arc::new(dihedral(3));
        let t = theta_d3(&g, 1);
        for a in 0..6 {
            for b in 0..6 {
                assert!(transgression_right(&t, 0, a, b).is_zero());
                assert!(transgression_left(&t, 0, a, b).is_zero());
            }
        }
        let z = super::super::Cochain::zero(g, 3);
        assert!(transgression_right(&z, 3, 1, 2).is_zero());
    }
}
