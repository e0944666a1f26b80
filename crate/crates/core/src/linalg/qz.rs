//! Integer linear systems with right-hand sides in ℚ/ℤ.
//!
//! Rows are fed one at a time into a sparse echelon form that only pivots on
//! ±1 entries. Rows without a unit entry are kept aside and, together with
//! the columns that never received a pivot, form a small dense system which
//! is handled by Smith normal form. Because ℚ/ℤ is divisible, a system is
//! solvable exactly when the Smith-reduced right-hand side vanishes on the
//! zero rows, so a negative answer needs no modulus bound.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalars::Phase;

use super::smith::{smith_normal_form, IntMatrix};

/// Sparse integer row: sorted `(column, coefficient)` pairs, no zeros.
pub type SparseRow = Vec<(usize, i64)>;

/// Combine duplicate columns and drop zeros.
pub fn normalize_row(mut row: Vec<(usize, i64)>) -> SparseRow {
    row.sort_unstable_by_key(|e| e.0);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

struct PivotRow {
    col: usize,
    // entries in non-pivot columns only
    rest: HashMap<usize, i64>,
    rhs: Phase,
}

/// Reduced form of a system `A·x = b` over ℚ/ℤ.
pub struct Reduced {
    ncols: usize,
    pivots: Vec<PivotRow>,
    free: Vec<usize>,
    free_pos: Vec<usize>,
    dense: IntMatrix<BigInt>,
    dense_rhs: Vec<Phase>,
    inconsistent: bool,
}

/// A finite abelian group given as Z/d₁ ⊕ … with explicit generators.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteQuotient {
    pub invariants: Vec<u64>,
    pub generators: Vec<Vec<Phase>>,
}

const NONE: usize = usize::MAX;

fn checked(a: i64, b: i64, k: i64) -> Result<i64> {
    // a - k*b
    k.checked_mul(b).and_then(|t| a.checked_sub(t)).ok_or(Error::Overflow)
}

impl Reduced {
    /// Eliminate the rows of a system with `ncols` unknowns.
    pub fn new(ncols: usize, rows: impl IntoIterator<Item = (SparseRow, Phase)>) -> Result<Self> {
        let mut pivots: Vec<PivotRow> = Vec::new();
        let mut pivot_of = vec![NONE; ncols];
        let mut users: Vec<Vec<usize>> = vec![Vec::new(); ncols];
        let mut deferred: Vec<(SparseRow, Phase)> = Vec::new();
        let mut inconsistent = false;

        for (row, rhs) in rows {
            let (acc, rhs) = reduce(&row, rhs, &pivots, &pivot_of)?;
            if acc.is_empty() {
                inconsistent |= !rhs.is_zero();
                continue;
            }
            let choice = acc
                .iter()
                .filter(|(_, v)| v.abs() == 1)
                .min_by_key(|(c, _)| (users[**c].len(), **c))
                .map(|(c, v)| (*c, *v));
            let Some((col, sign)) = choice else {
                let mut r: SparseRow = acc.into_iter().collect();
                r.sort_unstable();
                deferred.push((r, rhs));
                continue;
            };
            let mut rest = acc;
            rest.remove(&col);
            if sign < 0 {
                rest.values_mut().for_each(|v| *v = -*v);
            }
            let rhs = if sign < 0 { -rhs } else { rhs };
            let id = pivots.len();
            // eliminate `col` from existing pivot rows
            let holders = std::mem::take(&mut users[col]);
            for r in holders {
                let Some(a) = pivots[r].rest.remove(&col) else { continue };
                for (&c, &v) in &rest {
                    let e = pivots[r].rest.entry(c).or_insert(0);
                    let was_zero = *e == 0;
                    *e = checked(*e, v, a)?;
                    if *e == 0 {
                        pivots[r].rest.remove(&c);
                    } else if was_zero {
                        users[c].push(r);
                    }
                }
                pivots[r].rhs -= rhs.scale(a);
            }
            for &c in rest.keys() {
                users[c].push(id);
            }
            pivot_of[col] = id;
            pivots.push(PivotRow { col, rest, rhs });
            // stale entries in `users` are tolerated; they are checked on use
            if pivots.len().is_multiple_of(256) {
                for u in users.iter_mut() {
                    u.sort_unstable();
                    u.dedup();
                }
            }
        }

        let free: Vec<usize> = (0..ncols).filter(|&c| pivot_of[c] == NONE).collect();
        let mut free_pos = vec![NONE; ncols];
        for (i, &c) in free.iter().enumerate() {
            free_pos[c] = i;
        }
        let mut dense_rows = Vec::new();
        let mut dense_rhs = Vec::new();
        for (row, rhs) in deferred {
            let (acc, rhs) = reduce(&row, rhs, &pivots, &pivot_of)?;
            if acc.is_empty() {
                inconsistent |= !rhs.is_zero();
                continue;
            }
            let mut r = vec![BigInt::zero(); free.len()];
            for (c, v) in acc {
                r[free_pos[c]] = BigInt::from(v);
            }
            dense_rows.push(r);
            dense_rhs.push(rhs);
        }
        let dense = IntMatrix::from_rows(free.len(), dense_rows);
        Ok(Reduced { ncols, pivots, free, free_pos, dense, dense_rhs, inconsistent })
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    /// Extend values of the free columns to a full vector.
    fn extend(&self, free_vals: &[Phase], homogeneous: bool) -> Vec<Phase> {
        let mut x = vec![Phase::ZERO; self.ncols];
        for (i, &c) in self.free.iter().enumerate() {
            x[c] = free_vals[i];
        }
        for p in &self.pivots {
            let mut v = if homogeneous { Phase::ZERO } else { p.rhs };
            for (&c, &a) in &p.rest {
                v -= x[c].scale(a);
            }
            x[p.col] = v;
        }
        x
    }

    /// Some solution, or None when the system has none.
    pub fn particular(&self) -> Option<Vec<Phase>> {
        if self.inconsistent {
            return None;
        }
        let f = self.free.len();
        if self.dense.rows == 0 {
            return Some(self.extend(&vec![Phase::ZERO; f], false));
        }
        let s = smith_normal_form(&self.dense);
        let c: Vec<Phase> = (0..self.dense.rows)
            .map(|i| {
                (0..self.dense.rows)
                    .filter(|&k| !s.left.data[i][k].is_zero())
                    .map(|k| self.dense_rhs[k].scale_big(&s.left.data[i][k]))
                    .sum()
            })
            .collect();
        if c[s.rank()..].iter().any(|p| !p.is_zero()) {
            return None;
        }
        let y: Vec<Phase> = (0..f)
            .map(|j| if j < s.rank() { c[j].div_int(s.diagonal[j].to_i64().expect("small invariant")) } else { Phase::ZERO })
            .collect();
        let xf: Vec<Phase> = (0..f)
            .map(|i| (0..f).filter(|&j| !y[j].is_zero()).map(|j| y[j].scale_big(&s.right.data[i][j])).sum())
            .collect();
        Some(self.extend(&xf, false))
    }

    /// The solution group of the homogeneous system modulo the span of the
    /// given integer vectors (which must themselves be solutions).
    pub fn kernel_modulo(&self, gauge: &[SparseRow]) -> Result<FiniteQuotient> {
        let f = self.free.len();
        let mut y = IntMatrix::<BigInt>::zeros(f, gauge.len());
        for (j, g) in gauge.iter().enumerate() {
            for &(c, v) in g {
                if self.free_pos[c] != NONE {
                    y.data[self.free_pos[c]][j] += v;
                }
            }
        }
        let sy = smith_normal_form(&y);
        let r = sy.rank();
        let h = self.dense.mul(&sy.left_inv);
        if h.data.iter().any(|row| row[..r].iter().any(|x| !x.is_zero())) {
            return Err(Error::InvalidDatum("gauge vectors do not solve the system".into()));
        }
        if r == f {
            return Ok(FiniteQuotient { invariants: vec![], generators: vec![] });
        }
        let h2 = h.columns(r..f);
        let s2 = smith_normal_form(&h2);
        if s2.rank() < f - r {
            return Err(Error::InfiniteQuotient);
        }
        let mut invariants = Vec::new();
        let mut generators = Vec::new();
        for (i, d) in s2.diagonal.iter().enumerate() {
            if d.is_one() {
                continue;
            }
            let d = d.to_u64().ok_or(Error::Overflow)?;
            let step = Phase::new(1, d as i64);
            // z = (0, Q₂ e_i / d), x_F = P_Y⁻¹ z
            let mut z = vec![Phase::ZERO; f];
            for k in 0..f - r {
                z[r + k] = step.scale_big(&s2.right.data[k][i]);
            }
            let xf: Vec<Phase> = (0..f)
                .map(|a| (r..f).filter(|&b| !z[b].is_zero()).map(|b| z[b].scale_big(&sy.left_inv.data[a][b])).sum())
                .collect();
            invariants.push(d);
            generators.push(self.extend(&xf, true));
        }
        Ok(FiniteQuotient { invariants, generators })
    }
}

fn reduce(
    row: &SparseRow,
    rhs: Phase,
    pivots: &[PivotRow],
    pivot_of: &[usize],
) -> Result<(HashMap<usize, i64>, Phase)> {
    let mut acc: HashMap<usize, i64> = HashMap::with_capacity(row.len() * 4);
    let mut rhs = rhs;
    for &(c, v) in row {
        if pivot_of[c] == NONE {
            let e = acc.entry(c).or_insert(0);
            *e = e.checked_add(v).ok_or(Error::Overflow)?;
        }
    }
    for &(c, v) in row {
        let id = pivot_of[c];
        if id == NONE {
            continue;
        }
        let p = &pivots[id];
        for (&pc, &pv) in &p.rest {
            let e = acc.entry(pc).or_insert(0);
            *e = checked(*e, pv, v)?;
        }
        rhs -= p.rhs.scale(v);
    }
    acc.retain(|_, v| *v != 0);
    Ok((acc, rhs))
}

impl FiniteQuotient {
    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }

    /// All elements Σ aᵢ·genᵢ with 0 ≤ aᵢ < dᵢ, in mixed-radix order.
    pub fn elements(&self, len: usize) -> Vec<Vec<Phase>> {
        let mut out = vec![vec![Phase::ZERO; len]];
        for (d, g) in self.invariants.iter().zip(&self.generators) {
            let mut next = Vec::with_capacity(out.len() * *d as usize);
            for a in 0..*d as i64 {
                for base in &out {
                    next.push(base.iter().zip(g).map(|(x, y)| *x + y.scale(a)).collect());
                }
            }
            out = next;
        }
        out
    }
}
