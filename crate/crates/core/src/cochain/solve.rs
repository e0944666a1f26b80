use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{normalize_row, Reduced, SparseRow};
use crate::scalars::Phase;

use super::Cochain;

/// Bound on the number of equations generated for one system.
pub const MAX_EQUATIONS: usize = 20_000_000;

/// Coordinates of normalized m-cochains: tuples of non-identity elements.
struct Coords {
    n: usize,
    m: usize,
}

impl Coords {
    fn len(&self) -> usize {
        (self.n - 1).pow(self.m as u32)
    }

    fn col(&self, args: &[usize]) -> Option<usize> {
        let mut c = 0;
        for &a in args {
            if a == 0 {
                return None;
            }
            c = c * (self.n - 1) + (a - 1);
        }
        Some(c)
    }

    fn tuple(&self, mut c: usize) -> Vec<usize> {
        let mut v = vec![0; self.m];
        for i in (0..self.m).rev() {
            v[i] = c % (self.n - 1) + 1;
            c /= self.n - 1;
        }
        v
    }

    fn to_cochain(&self, group: Arc<GroupTable>, x: &[Phase]) -> Cochain {
        let mut c = Cochain::zero(group, self.m);
        for (i, v) in x.iter().enumerate() {
            if !v.is_zero() {
                c.set(&self.tuple(i), *v);
            }
        }
        c
    }
}

/// The row of d(x) at `args` (length m + 1) in coordinates of m-cochains.
fn coboundary_row(g: &GroupTable, coords: &Coords, args: &[usize]) -> SparseRow {
    let m = coords.m;
    let mut row = Vec::with_capacity(m + 2);
    let mut push = |t: &[usize], s: i64| {
        if let Some(c) = coords.col(t) {
            row.push((c, s));
        }
    };
    push(&args[1..], 1);
    let mut buf = Vec::with_capacity(m);
    for i in 1..=m {
        buf.clear();
        buf.extend_from_slice(&args[..i - 1]);
        buf.push(g.mul(args[i - 1], args[i]));
        buf.extend_from_slice(&args[i + 1..]);
        push(&buf, if i % 2 == 1 { -1 } else { 1 });
    }
    push(&args[..m], if (m + 1) % 2 == 1 { -1 } else { 1 });
    normalize_row(row)
}

fn check_size(n: usize, len: usize) -> Result<()> {
    let rows = (n.max(2) - 1).checked_pow(len as u32).unwrap_or(usize::MAX);
    if rows > MAX_EQUATIONS {
        return Err(Error::SizeLimitExceeded { what: "equations", size: rows, limit: MAX_EQUATIONS });
    }
    Ok(())
}

/// A normalized γ of degree n − 1 with d(γ) = β, or `NotACoboundary`.
///
/// The system is solved exactly over ℚ/ℤ, so a negative verdict is final.
pub fn solve_coboundary(beta: &Cochain) -> Result<Cochain> {
    let n = beta.degree();
    if !(1..=3).contains(&n) {
        return Err(Error::DegreeUnsupported(n));
    }
    let g = beta.group().clone();
    let ord = g.order();
    if ord == 1 {
        return Ok(Cochain::zero(g, n - 1));
    }
    check_size(ord, n)?;
    let coords = Coords { n: ord, m: n - 1 };
    let eq = Coords { n: ord, m: n };
    let rows = (0..eq.len()).map(|i| {
        let args = eq.tuple(i);
        (coboundary_row(&g, &coords, &args), beta.get(&args))
    });
    let red = Reduced::new(coords.len(), rows)?;
    let x = red.particular().ok_or(Error::NotACoboundary)?;
    let gamma = coords.to_cochain(g, &x);
    debug_assert!(gamma.differential().map(|d| d == *beta).unwrap_or(false));
    Ok(gamma)
}

/// Hⁿ(G, ℚ/ℤ) as invariant factors, with one representative per factor.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub degree: usize,
    pub invariants: Vec<u64>,
    pub generators: Vec<Cochain>,
}

impl Cohomology {
    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }

    /// Every class as a representative cocycle, in mixed-radix order.
    pub fn all_classes(&self) -> Vec<Cochain> {
        let mut out: Vec<Cochain> = Vec::new();
        let Some(first) = self.generators.first() else {
            return out;
        };
        out.push(Cochain::zero(first.group().clone(), self.degree));
        for (d, gen) in self.invariants.iter().zip(&self.generators) {
            let mut next = Vec::new();
            for a in 0..*d as i64 {
                for base in &out {
                    next.push(base.add(&gen.scale(a)));
                }
            }
            out = next;
        }
        out
    }
}

pub fn cohomology(group: &Arc<GroupTable>, degree: usize) -> Result<Cohomology> {
    if !(1..=3).contains(&degree) {
        return Err(Error::DegreeUnsupported(degree));
    }
    let ord = group.order();
    if ord == 1 {
        return Ok(Cohomology { degree, invariants: vec![], generators: vec![] });
    }
    check_size(ord, degree + 1)?;
    let coords = Coords { n: ord, m: degree };
    let eq = Coords { n: ord, m: degree + 1 };
    let rows = (0..eq.len()).map(|i| (coboundary_row(group, &coords, &eq.tuple(i)), Phase::ZERO));
    let red = Reduced::new(coords.len(), rows)?;
    let gauge: Vec<SparseRow> = if degree == 1 {
        vec![]
    } else {
        let lower = Coords { n: ord, m: degree - 1 };
        // column t of the differential d_{degree-1}
        let mut cols: Vec<Vec<(usize, i64)>> = vec![Vec::new(); lower.len()];
        for i in 0..coords.len() {
            for (c, v) in coboundary_row(group, &lower, &coords.tuple(i)) {
                cols[c].push((i, v));
            }
        }
        cols.into_iter().map(normalize_row).collect()
    };
    let q = red.kernel_modulo(&gauge)?;
    let generators = q.generators.iter().map(|x| coords.to_cochain(group.clone(), x)).collect();
    Ok(Cohomology { degree, invariants: q.invariants, generators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::theta_d3;
    use crate::group::builtin::{builtin_group, cyclic, dihedral};

    #[test]
    fn d3_cohomology() {
        let g = Arc::new(dihedral(3));
        assert_eq!(cohomology(&g, 3).unwrap().invariants, vec![6]);
        assert_eq!(cohomology(&g, 2).unwrap().invariants, Vec::<u64>::new());
        assert_eq!(cohomology(&g, 1).unwrap().invariants, vec![2]);
        let t = Arc::new(cyclic(1));
        assert!(cohomology(&t, 3).unwrap().invariants.is_empty());
    }

    #[test]
    fn small_groups() {
        let cases: [(&str, usize, Vec<u64>); 5] = [
            ("cyclic:4", 3, vec![4]),
            ("cyclic:4", 2, vec![]),
            ("product:cyclic:2,cyclic:2", 2, vec![2]),
            ("product:cyclic:2,cyclic:2", 3, vec![2, 2, 2]),
            ("q8", 2, vec![]),
        ];
        for (spec, n, expect) in cases {
            let g = Arc::new(builtin_group(&spec.parse().unwrap()).unwrap());
            let h = cohomology(&g, n).unwrap();
            assert_eq!(h.invariants, expect, "{spec} degree {n}");
            for c in &h.generators {
                assert!(c.is_cocycle());
            }
        }
    }

    #[test]
    fn generators_have_the_stated_order() {
        let g = Arc::new(dihedral(3));
        let h = cohomology(&g, 3).unwrap();
        let gen = &h.generators[0];
        for k in 1..6 {
            assert!(matches!(solve_coboundary(&gen.scale(k)), Err(Error::NotACoboundary)));
        }
        assert!(solve_coboundary(&gen.scale(6)).is_ok());
    }

    #[test]
    fn theta_classes() {
        let g = Arc::new(dihedral(3));
        for k in 1..6 {
            assert!(matches!(solve_coboundary(&theta_d3(&g, k)), Err(Error::NotACoboundary)));
        }
        let w = solve_coboundary(&theta_d3(&g, 6)).unwrap();
        assert!(w.differential().unwrap().is_zero());
    }

    #[test]
    fn round_trip() {
        let g = Arc::new(dihedral(3));
        let c = Cochain::from_fn(g.clone(), 2, |a| Phase::new((a[0] * 5 + a[1] * 7) as i64, 12));
        let beta = c.differential().unwrap();
        let w = solve_coboundary(&beta).unwrap();
        assert_eq!(w.differential().unwrap(), beta);
        assert!(w.is_normalized());
    }
}
