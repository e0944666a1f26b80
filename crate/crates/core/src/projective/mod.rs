//! Ordinary and projective character tables.
//!
//! A μ-projective character of H is read off an ordinary character of the
//! central extension E = ℤ/n × H with (a,g)(b,h) = (a + b + n·μ(g,h), gh)
//! on which the central generator (1,e) acts by ζ_n.

pub mod chartable;

use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cochain::{solve_coboundary, Cochain};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::scalars::display::pretty;
use crate::Cyc;

pub use chartable::{character_table, character_table_bounded, CharacterTable, DEFAULT_TABLE_BOUND};

/// Bound on |H|·n for the extension group.
pub const EXTENSION_BOUND: usize = 1024;

/// The extension ℤ/n ×_μ H with element (a, h) at index a·|H| + h.
pub fn central_extension(h: &GroupTable, mu: &Cochain, n: u64) -> Result<GroupTable> {
    if mu.degree() != 2 {
        return Err(Error::DegreeUnsupported(mu.degree()));
    }
    if !mu.is_cocycle() {
        return Err(Error::NotACocycle);
    }
    for v in mu.values() {
        if !n.is_multiple_of(v.denom() as u64) {
            return Err(Error::IncompatibleOrder { order: n, denominator: v.denom() as u64 });
        }
    }
    let k = h.order();
    let size = k * n as usize;
    if size > EXTENSION_BOUND {
        return Err(Error::SizeLimitExceeded { what: "extension order", size, limit: EXTENSION_BOUND });
    }
    let shift = |g: usize, x: usize| -> usize {
        let v = mu.at2(g, x);
        (v.numer() as u64 * (n / v.denom() as u64)) as usize
    };
    let nn = n as usize;
    let mut mul = Vec::with_capacity(size * size);
    for i in 0..size {
        let (a, g) = (i / k, i % k);
        for j in 0..size {
            let (b, x) = (j / k, j % k);
            mul.push(((a + b + shift(g, x)) % nn) * k + h.mul(g, x));
        }
    }
    let names = (0..size)
        .map(|i| if i / k == 0 { h.name(i % k).to_string() } else { format!("z^{}{}", i / k, h.name(i % k)) })
        .collect();
    GroupTable::from_multiplication_table(mul.chunks(size).map(|c| c.to_vec()).collect(), names)
}

/// Irreducible μ-projective characters of a group, listed element-wise.
#[derive(Clone, Debug)]
pub struct ProjectiveTable {
    pub group: Arc<GroupTable>,
    pub cocycle: Cochain,
    pub root_order: u64,
    /// `rows[i][h]` is the value of character i at element h.
    pub rows: Vec<Vec<Cyc>>,
}

impl ProjectiveTable {
    pub fn degree(&self, i: usize) -> u64 {
        let d = self.rows[i][0].to_rational().expect("integral degree");
        num_traits::ToPrimitive::to_u64(&d.to_integer()).expect("small degree")
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn to_json(&self, ascii: bool) -> TableJson {
        TableJson {
            n: self.root_order,
            classes: self.group.names().to_vec(),
            rows: (0..self.len())
                .map(|i| TableRow { degree: self.degree(i), values: self.rows[i].iter().map(|v| pretty(v, ascii)).collect() })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TableJson {
    #[serde(rename = "N")]
    pub n: u64,
    pub classes: Vec<String>,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TableRow {
    pub degree: u64,
    pub values: Vec<String>,
}

/// The irreducible μ-projective characters of `group`, sorted by degree and
/// then by values.
pub fn projective_character_table(group: &Arc<GroupTable>, mu: &Cochain) -> Result<ProjectiveTable> {
    if !Arc::ptr_eq(mu.group(), group) && mu.group().as_ref() != group.as_ref() {
        return Err(Error::MismatchedContext);
    }
    let k = group.order();
    let denominator = |c: &Cochain| c.values().iter().fold(1u64, |acc, v| acc.lcm(&(v.denom() as u64)));
    let (reduced, lambda) = reduce_twist(mu, denominator(mu))?;
    let n = denominator(&reduced);
    let (root_order, mut rows): (u64, Vec<Vec<Cyc>>) = if n == 1 {
        let t = character_table(group)?;
        (t.root_order, t.rows.iter().map(|r| (0..k).map(|h| r[t.classes.class_of[h]].clone()).collect()).collect())
    } else {
        let ext = Arc::new(central_extension(group, &reduced, n)?);
        let t = character_table(&ext)?;
        let zeta = Cyc::root(1, n);
        let rows = (0..t.len())
            .filter(|&i| {
                let d = Cyc::from_int(t.degree(i) as i64, 1);
                *t.value(i, k) == &d * &zeta
            })
            .map(|i| (0..k).map(|h| t.value(i, h).clone()).collect())
            .collect();
        (t.root_order, rows)
    };
    let root_order = root_order.lcm(&denominator(&lambda));
    if !lambda.is_zero() {
        let shift: Vec<Cyc> =
            (0..k).map(|h| Cyc::from_phase(-lambda.at1(h), root_order)).collect::<Result<_>>()?;
        for row in &mut rows {
            for (v, s) in row.iter_mut().zip(&shift) {
                *v = s * &*v;
            }
        }
        chartable::sort_rows(&mut rows);
    }
    Ok(ProjectiveTable { group: group.clone(), cocycle: mu.clone(), root_order, rows })
}

/// μ' = μ + dλ with values in (1/m)ℤ/ℤ, m the order of [μ]. A μ'-projective
/// character χ' gives the μ-projective character e(−λ)·χ'.
fn reduce_twist(mu: &Cochain, n: u64) -> Result<(Cochain, Cochain)> {
    let k = mu.group().order() as u64;
    let zero = Cochain::zero(mu.group().clone(), 1);
    let Some(m) = (1..=k.min(n)).find(|m| k.is_multiple_of(*m) && solve_coboundary(&mu.scale(*m as i64)).is_ok()) else {
        return Ok((mu.clone(), zero));
    };
    if m == n {
        return Ok((mu.clone(), zero));
    }
    let nu = solve_coboundary(&mu.scale(m as i64))?;
    let lambda = nu.neg();
    let lambda = Cochain::from_fn(mu.group().clone(), 1, |h| lambda.at1(h[0]).div_int(m as i64));
    Ok((mu.add(&lambda.differential()?), lambda))
}
