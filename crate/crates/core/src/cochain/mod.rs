//! Normalized cochains G^n → ℚ/ℤ and the bar differential.

mod double;
mod epsilon;
mod solve;
mod theta;
mod transgression;

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};
use crate::scalars::Phase;

pub use double::hs_check;
pub use epsilon::{EpsilonEntry, EpsilonTable};
pub use solve::{cohomology, solve_coboundary, Cohomology};
pub use theta::theta_d3;
pub use transgression::{check_pca_identities, transgression_left, transgression_right, Transgressions};

pub const MAX_DEGREE: usize = 4;

#[derive(Clone, Debug)]
pub struct Cochain {
    group: Arc<GroupTable>,
    degree: usize,
    values: Vec<Phase>,
}

impl PartialEq for Cochain {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.values == other.values
            && (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group)
    }
}

/// Decode a flat index into `degree` group elements.
fn decode(mut idx: usize, n: usize, degree: usize, out: &mut [usize]) {
    for i in (0..degree).rev() {
        out[i] = idx % n;
        idx /= n;
    }
}

impl Cochain {
    pub fn zero(group: Arc<GroupTable>, degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree too high");
        let len = group.order().pow(degree as u32);
        Cochain { group, degree, values: vec![Phase::ZERO; len] }
    }

    /// Tabulate `f`; entries with an identity argument are forced to zero.
    pub fn from_fn(group: Arc<GroupTable>, degree: usize, f: impl Fn(&[usize]) -> Phase + Sync) -> Self {
        let mut c = Cochain::zero(group, degree);
        let n = c.group.order();
        c.values.par_iter_mut().enumerate().for_each(|(idx, v)| {
            let mut args = [0usize; MAX_DEGREE];
            decode(idx, n, degree, &mut args);
            if args[..degree].iter().all(|&a| a != 0) {
                *v = f(&args[..degree]);
            }
        });
        c
    }

    pub fn from_values(group: Arc<GroupTable>, degree: usize, values: Vec<Phase>) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooHigh(degree));
        }
        if values.len() != group.order().pow(degree as u32) {
            return Err(Error::Parse("cochain table has the wrong size".into()));
        }
        Ok(Cochain { group, degree, values })
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[Phase] {
        &self.values
    }

    pub fn index(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.degree);
        let n = self.group.order();
        args.iter().fold(0, |acc, &a| acc * n + a)
    }

    pub fn get(&self, args: &[usize]) -> Phase {
        self.values[self.index(args)]
    }

    pub fn set(&mut self, args: &[usize], v: Phase) {
        let i = self.index(args);
        self.values[i] = v;
    }

    #[inline]
    pub fn at1(&self, a: usize) -> Phase {
        self.values[a]
    }

    #[inline]
    pub fn at2(&self, a: usize, b: usize) -> Phase {
        self.values[a * self.group.order() + b]
    }

    #[inline]
    pub fn at3(&self, a: usize, b: usize, c: usize) -> Phase {
        let n = self.group.order();
        self.values[(a * n + b) * n + c]
    }

    pub fn is_normalized(&self) -> bool {
        let n = self.group.order();
        let mut args = [0usize; MAX_DEGREE];
        self.values.iter().enumerate().all(|(idx, v)| {
            decode(idx, n, self.degree, &mut args);
            v.is_zero() || args[..self.degree].iter().all(|&a| a != 0)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Least common multiple of the value denominators.
    pub fn root_order(&self) -> u64 {
        crate::scalars::common_root_order(&self.values, [])
    }

    pub fn scale(&self, k: i64) -> Cochain {
        Cochain {
            group: self.group.clone(),
            degree: self.degree,
            values: self.values.iter().map(|v| v.scale(k)).collect(),
        }
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.values.len(), other.values.len());
        Cochain {
            group: self.group.clone(),
            degree: self.degree,
            values: self.values.iter().zip(&other.values).map(|(a, b)| *a + *b).collect(),
        }
    }

    pub fn neg(&self) -> Cochain {
        self.scale(-1)
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.neg())
    }

    /// Standard normalized bar differential.
    pub fn differential(&self) -> Result<Cochain> {
        let n = self.degree;
        if n >= MAX_DEGREE {
            return Err(Error::DegreeTooHigh(n));
        }
        let g = self.group.clone();
        let out = Cochain::from_fn(g.clone(), n + 1, |args| self.coboundary_at(args));
        Ok(out)
    }

    /// (dc)(g₀,…,gₙ) without tabulating.
    pub fn coboundary_at(&self, args: &[usize]) -> Phase {
        let n = self.degree;
        debug_assert_eq!(args.len(), n + 1);
        let g = &self.group;
        let mut buf = [0usize; MAX_DEGREE];
        let mut total = self.get(&args[1..]);
        for i in 1..=n {
            let mut k = 0;
            for j in 0..=n {
                if j == i {
                    continue;
                }
                buf[k] = if j == i - 1 { g.mul(args[i - 1], args[i]) } else { args[j] };
                k += 1;
            }
            let v = self.get(&buf[..n]);
            total = if i % 2 == 1 { total - v } else { total + v };
        }
        let last = self.get(&args[..n]);
        if (n + 1) % 2 == 1 {
            total - last
        } else {
            total + last
        }
    }

    /// First tuple at which the cocycle identity fails.
    pub fn cocycle_failure(&self) -> Option<Vec<usize>> {
        if self.degree >= MAX_DEGREE {
            return None;
        }
        let n = self.group.order();
        let deg = self.degree + 1;
        let len = n.pow(deg as u32);
        (0..len).into_par_iter().find_first(|&idx| {
            let mut args = [0usize; MAX_DEGREE];
            decode(idx, n, deg, &mut args);
            !self.coboundary_at(&args[..deg]).is_zero()
        })
        .map(|idx| {
            let mut args = vec![0usize; deg];
            decode(idx, n, deg, &mut args);
            args
        })
    }

    pub fn is_cocycle(&self) -> bool {
        self.degree < MAX_DEGREE && self.cocycle_failure().is_none()
    }

    /// Restriction to a subgroup, indexed by the subgroup's local table.
    pub fn restrict(&self, h: &Subgroup) -> Cochain {
        let els = h.elements();
        Cochain::from_fn(h.table(), self.degree, |args| {
            let mut buf = [0usize; MAX_DEGREE];
            for (i, &a) in args.iter().enumerate() {
                buf[i] = els[a];
            }
            self.get(&buf[..args.len()])
        })
    }

    /// Pull back along a map of index sets `phi: local → self.group`.
    pub fn pullback(&self, group: Arc<GroupTable>, phi: &[usize]) -> Cochain {
        Cochain::from_fn(group, self.degree, |args| {
            let mut buf = [0usize; MAX_DEGREE];
            for (i, &a) in args.iter().enumerate() {
                buf[i] = phi[a];
            }
            self.get(&buf[..args.len()])
        })
    }

    /// α × β on G × H, with (g, h) at index g·|H| + h.
    pub fn product(&self, other: &Cochain, product_group: Arc<GroupTable>) -> Cochain {
        assert_eq!(self.degree, other.degree);
        let m = other.group.order();
        Cochain::from_fn(product_group, self.degree, |args| {
            let mut a = [0usize; MAX_DEGREE];
            let mut b = [0usize; MAX_DEGREE];
            for (i, &x) in args.iter().enumerate() {
                a[i] = x / m;
                b[i] = x % m;
            }
            self.get(&a[..args.len()]) + other.get(&b[..args.len()])
        })
    }

    /// Nonzero entries as JSON-friendly records.
    pub fn to_json(&self) -> CochainJson {
        let n = self.group.order();
        let mut args = vec![0usize; self.degree];
        let values = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(idx, v)| {
                decode(idx, n, self.degree, &mut args);
                CochainEntry { args: args.clone(), phase: *v }
            })
            .collect();
        CochainJson { group: None, degree: self.degree, values }
    }

    pub fn from_json(group: Arc<GroupTable>, j: &CochainJson) -> Result<Self> {
        let mut c = Cochain::zero(group, j.degree);
        let n = c.group.order();
        for e in &j.values {
            if e.args.len() != j.degree || e.args.iter().any(|&a| a >= n) {
                return Err(Error::Parse(format!("bad cochain entry {:?}", e.args)));
            }
            c.set(&e.args, e.phase);
        }
        Ok(c)
    }
}

/// Product cocycle α × β.
pub fn product_cocycle(alpha: &Cochain, beta: &Cochain) -> (Arc<GroupTable>, Cochain) {
    let g = Arc::new(alpha.group().direct_product(beta.group()));
    let c = alpha.product(beta, g.clone());
    (g, c)
}

/// −α.
pub fn inverse_cocycle(alpha: &Cochain) -> Cochain {
    alpha.neg()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CochainEntry {
    pub args: Vec<usize>,
    pub phase: Phase,
}

/// `{"group": ..., "degree": n, "values": [{"args": [...], "phase": "p/q"}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CochainJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<serde_json::Value>,
    pub degree: usize,
    #[serde(default)]
    pub values: Vec<CochainEntry>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::dihedral;

    fn d3() -> Arc<GroupTable> {
        Arc::new(dihedral(3))
    }

    fn pseudo(seed: u64, i: usize) -> Phase {
        let x = (seed ^ (i as u64).wrapping_mul(0x9E3779B97F4A7C15)).wrapping_mul(0xBF58476D1CE4E5B9);
        Phase::new((x >> 40) as i64 % 12, 12)
    }

    #[test]
    fn one_cochain_differential() {
        let g = d3();
        let c = Cochain::from_fn(g.clone(), 1, |a| pseudo(7, a[0]));
        let d = c.differential().unwrap();
        for f in 0..6 {
            for h in 0..6 {
                assert_eq!(d.at2(f, h), c.at1(h) - c.at1(g.mul(f, h)) + c.at1(f));
            }
        }
    }

    #[test]
    fn dd_is_zero() {
        let g = d3();
        for seed in 0..3 {
            let c = Cochain::from_fn(g.clone(), 2, |a| pseudo(seed, a[0] * 6 + a[1]));
            assert!(c.differential().unwrap().differential().unwrap().is_zero());
            let c = Cochain::from_fn(g.clone(), 1, |a| pseudo(seed, a[0]));
            assert!(c.differential().unwrap().is_cocycle());
        }
        assert!(Cochain::zero(g.clone(), 3).is_cocycle());
        assert!(matches!(Cochain::zero(g, 4).differential(), Err(Error::DegreeTooHigh(4))));
    }

    #[test]
    fn restriction() {
        let g = d3();
        let t = theta_d3(&g, 1);
        let whole = Subgroup::whole(g.clone());
        assert_eq!(t.restrict(&whole).values(), t.values());
        let triv = Subgroup::trivial(g.clone());
        assert!(t.restrict(&triv).is_zero());
        let c3 = Subgroup::new(g, vec![0, 1, 2]).unwrap();
        assert!(t.restrict(&c3).is_cocycle());
    }

    #[test]
    fn product_and_inverse() {
        let g = d3();
        let t = theta_d3(&g, 1);
        let (gg, p) = product_cocycle(&t, &inverse_cocycle(&t));
        assert_eq!(gg.order(), 36);
        assert!(p.is_cocycle());
        assert!(t.add(&inverse_cocycle(&t)).is_zero());
        let z = Cochain::zero(g.clone(), 3);
        assert!(product_cocycle(&z, &z).1.is_zero());
    }

    #[test]
    fn json_round_trip() {
        let g = d3();
        let t = theta_d3(&g, 2);
        let j = serde_json::to_string(&t.to_json()).unwrap();
        let back: CochainJson = serde_json::from_str(&j).unwrap();
        assert_eq!(Cochain::from_json(g, &back).unwrap(), t);
    }
}
