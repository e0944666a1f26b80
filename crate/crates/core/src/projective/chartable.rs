//! Ordinary character tables by the Dixon–Schneider method.
//!
//! Class matrices are diagonalized simultaneously over GF(p) with
//! p ≡ 1 (mod exp G); each common eigenvector gives the central character of
//! one irreducible. Eigenvalue multiplicities of ρ(g) are recovered from the
//! mod-p values on powers of g and lifted to ℚ(ζ_exp). The result is checked
//! by exact orthogonality.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, Classes, GroupTable};
use crate::linalg::modp::{inv_mod, is_prime, pow_mod, primitive_root, roots, ModMatrix};
use crate::Cyc;

pub const DEFAULT_TABLE_BOUND: usize = 1024;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: Arc<GroupTable>,
    pub classes: Classes,
    /// Values live in ℚ(ζ_N) with N = exp(G).
    pub root_order: u64,
    /// `rows[i][k]` is the value of character i on class k.
    pub rows: Vec<Vec<Cyc>>,
}

impl CharacterTable {
    pub fn degree(&self, i: usize) -> u64 {
        let d = self.rows[i][0].to_rational().expect("integral degree");
        num_traits::ToPrimitive::to_u64(&d.to_integer()).expect("small degree")
    }

    pub fn value(&self, i: usize, g: usize) -> &Cyc {
        &self.rows[i][self.classes.class_of[g]]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// The prime used for a group of order `n` and exponent `e`: the least
/// p ≡ 1 (mod e) with p > 2·√n·e. Such p does not divide n (every prime
/// divisor of n divides e), and distinct degrees d ≤ √n stay distinct mod p
/// since d² ≡ d'² forces p | (d − d')(d + d') < p.
pub fn dixon_prime(n: usize, e: usize) -> u64 {
    let bound = 2.0 * (n as f64).sqrt() * e as f64;
    let mut p = e as u64 + 1;
    while (p as f64) <= bound || !is_prime(p) {
        p += e as u64;
    }
    p
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

struct Space {
    rows: ModMatrix,
    pivots: Vec<usize>,
}

impl Space {
    fn from_vectors(vs: Vec<Vec<u64>>, k: usize, p: u64) -> Space {
        let mut m = ModMatrix::zeros(vs.len(), k, p);
        for (i, v) in vs.iter().enumerate() {
            for (j, &x) in v.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        let pivots = m.rref();
        let d = pivots.len();
        m.data.truncate(d * k);
        m.n = d;
        Space { rows: m, pivots }
    }

    fn dim(&self) -> usize {
        self.pivots.len()
    }

    fn vector(&self, i: usize) -> Vec<u64> {
        let k = self.rows.m;
        self.rows.data[i * k..(i + 1) * k].to_vec()
    }
}

/// Irreducible characters of `group`, sorted by degree and then by values.
pub fn character_table(group: &Arc<GroupTable>) -> Result<CharacterTable> {
    character_table_bounded(group, DEFAULT_TABLE_BOUND)
}

pub fn character_table_bounded(group: &Arc<GroupTable>, bound: usize) -> Result<CharacterTable> {
    let n = group.order();
    if n > bound {
        return Err(Error::SizeLimitExceeded { what: "group order", size: n, limit: bound });
    }
    let classes = conjugacy_classes(group);
    let k = classes.len();
    let e = group.exponent();
    let p = dixon_prime(n, e);
    let reps = classes.representatives();
    let sizes: Vec<u64> = classes.classes.iter().map(|c| c.len() as u64).collect();
    let inverse_class: Vec<usize> = reps.iter().map(|&g| classes.class_of[group.inv(g)]).collect();

    // class matrices: (M_j)[i][l] = #{x ∈ C_j : x⁻¹ z_l ∈ C_i}
    let class_matrix = |j: usize| -> ModMatrix {
        let mut m = ModMatrix::zeros(k, k, p);
        for (l, &z) in reps.iter().enumerate() {
            for &x in &classes.classes[j] {
                let i = classes.class_of[group.mul(group.inv(x), z)];
                let v = m.at(i, l) + 1;
                m.set(i, l, v);
            }
        }
        m
    };

    let mut spaces = vec![Space::from_vectors(
        (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect(),
        k,
        p,
    )];
    for j in 1..k {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let mj = class_matrix(j);
        let mut next = Vec::new();
        for s in spaces {
            if s.dim() == 1 {
                next.push(s);
                continue;
            }
            let d = s.dim();
            // restricted operator in the row basis of s
            let mut c = ModMatrix::zeros(d, d, p);
            for l in 0..d {
                let b = s.vector(l);
                for (i, &pc) in s.pivots.iter().enumerate() {
                    let u = (0..k).fold(0, |acc, t| (acc + mj.at(pc, t) * b[t]) % p);
                    c.set(i, l, u);
                }
            }
            for lambda in roots(&c.charpoly(), p) {
                let mut shifted = c.clone();
                for i in 0..d {
                    let v = (shifted.at(i, i) + p - lambda) % p;
                    shifted.set(i, i, v);
                }
                let vecs: Vec<Vec<u64>> = shifted
                    .nullspace()
                    .into_iter()
                    .map(|y| {
                        (0..k)
                            .map(|t| (0..d).fold(0, |acc, l| (acc + y[l] * s.rows.at(l, t)) % p))
                            .collect()
                    })
                    .collect();
                next.push(Space::from_vectors(vecs, k, p));
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|s| s.dim() != 1) {
        return Err(Error::NotACharacter("class algebra did not split".into()));
    }

    let z = pow_mod(primitive_root(p), (p - 1) / e as u64, p);
    let inv_e = inv_mod(e as u64 % p, p);
    let zpow: Vec<u64> = std::iter::successors(Some(1u64), |x| Some(x * z % p)).take(e).collect();
    let power_class: Vec<Vec<usize>> = reps
        .iter()
        .map(|&g| (0..e).map(|l| classes.class_of[group.pow(g, l as i64)]).collect())
        .collect();

    let mut rows = Vec::with_capacity(k);
    for s in &spaces {
        let w = s.vector(0);
        let scale = inv_mod(w[0], p);
        let omega: Vec<u64> = w.iter().map(|x| x * scale % p).collect();
        // |G| / χ(1)² = Σ ω_i ω_{i*} / |C_i|
        let sum = (0..k).fold(0, |acc, i| {
            (acc + omega[i] * omega[inverse_class[i]] % p * inv_mod(sizes[i] % p, p)) % p
        });
        let d2 = (n as u64 % p) * inv_mod(sum, p) % p;
        let deg = (1..=isqrt(n as u64))
            .find(|d| d * d % p == d2)
            .ok_or_else(|| Error::NotACharacter("no integral degree".into()))?;
        let theta: Vec<u64> = (0..k).map(|i| omega[i] * deg % p * inv_mod(sizes[i] % p, p) % p).collect();
        let mut row = Vec::with_capacity(k);
        for i in 0..k {
            let mut coeffs = vec![BigRational::zero(); e];
            for (kk, c) in coeffs.iter_mut().enumerate() {
                let s = (0..e).fold(0, |acc, l| (acc + theta[power_class[i][l]] * zpow[(e - (kk * l) % e) % e]) % p);
                let m = s * inv_e % p;
                if m > deg {
                    return Err(Error::NotACharacter("eigenvalue multiplicity out of range".into()));
                }
                *c = BigRational::from_integer(BigInt::from(m));
            }
            row.push(Cyc::from_coeffs(coeffs, e as u64));
        }
        rows.push(row);
    }
    sort_rows(&mut rows);
    let table = CharacterTable { group: group.clone(), classes, root_order: e as u64, rows };
    verify_orthogonality(&table)?;
    Ok(table)
}

/// Canonical row order: by degree, then value sequence under `display_cmp`.
pub fn sort_rows(rows: &mut [Vec<Cyc>]) {
    rows.sort_by(|a, b| {
        for (x, y) in a.iter().zip(b) {
            match x.display_cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    });
    // degree first: values at the identity are positive integers, and
    // display_cmp orders rationals descending, so flip to ascending degree
    rows.sort_by(|a, b| {
        let da = a[0].to_rational().unwrap();
        let db = b[0].to_rational().unwrap();
        da.cmp(&db)
    });
}

/// Exact check of ⟨χ_i, χ_j⟩ = δ_ij. Values have integer coefficients in
/// ℤ[x]/(x^e − 1), so each |G|·⟨χ_i, χ_j⟩ − |G|·δ_ij is an algebraic integer whose
/// conjugates are bounded by B = |G|·M² + |G|, M the largest coefficient
/// L¹-norm. Reducing at every prime above q ≡ 1 (mod e), q > B, sees all of
/// ℤ[ζ_e]/qℤ[ζ_e]; a nonzero element of qℤ[ζ_e] has a conjugate of size ≥ q.
fn verify_orthogonality(t: &CharacterTable) -> Result<()> {
    let n = t.group.order() as u64;
    let e = t.root_order as usize;
    let k = t.classes.len();
    let mut coeffs: Vec<Vec<Vec<i64>>> = Vec::with_capacity(t.rows.len());
    let mut m = 0u64;
    for row in &t.rows {
        let mut r = Vec::with_capacity(k);
        for v in row {
            let mut c = vec![0i64; e];
            for (a, x) in v.embed(e as u64).raw_coeffs().iter().enumerate() {
                if !x.is_integer() {
                    return Err(Error::NotACharacter("non-integral character value".into()));
                }
                c[a] = num_traits::ToPrimitive::to_i64(&x.to_integer())
                    .filter(|y| y.unsigned_abs() <= n)
                    .ok_or_else(|| Error::NotACharacter("character value out of range".into()))?;
            }
            m = m.max(c.iter().map(|y| y.unsigned_abs()).sum());
            r.push(c);
        }
        coeffs.push(r);
    }
    if m > n {
        return Err(Error::NotACharacter("character value out of range".into()));
    }
    let bound = n * m * m + n;
    let mut q = e as u64 + 1;
    while q <= bound || !is_prime(q) {
        q += e as u64;
    }
    let w = pow_mod(primitive_root(q), (q - 1) / e as u64, q);
    let wpow: Vec<u64> = std::iter::successors(Some(1u64), |x| Some(x * w % q)).take(e).collect();
    let sizes: Vec<u64> = t.classes.classes.iter().map(|c| c.len() as u64 % q).collect();
    let residue = |y: i64| y.rem_euclid(q as i64) as u64;
    for u in (1..e.max(2)).filter(|u| num_integer::gcd(*u, e) == 1) {
        let image = |c: &[i64], sign: usize| {
            c.iter().enumerate().fold(0, |acc, (a, &y)| (acc + residue(y) * wpow[(sign * u * a) % e]) % q)
        };
        let vals: Vec<Vec<u64>> = coeffs.iter().map(|r| r.iter().map(|c| image(c, 1)).collect()).collect();
        let conj: Vec<Vec<u64>> = coeffs.iter().map(|r| r.iter().map(|c| image(c, e - 1)).collect()).collect();
        for i in 0..t.rows.len() {
            for j in 0..=i {
                let s = (0..k).fold(0, |acc, c| (acc + sizes[c] * vals[i][c] % q * conj[j][c]) % q);
                let expect = if i == j { n % q } else { 0 };
                if s != expect {
                    return Err(Error::NotACharacter(format!("rows {i} and {j} are not orthonormal")));
                }
            }
        }
    }
    let total: u64 = (0..t.rows.len()).map(|i| t.degree(i).pow(2)).sum();
    if total != n {
        return Err(Error::NotACharacter("degree sum mismatch".into()));
    }
    Ok(())
}
