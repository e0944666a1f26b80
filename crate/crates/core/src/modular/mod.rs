//! Physical modular invariants of Z(G, α) as decompositions of Lagrangian
//! algebras in Z(G × G, α × α⁻¹) ≅ Z(G, α) ⊠ Z(G, α⁻¹).

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::centre::{Centre, CentreCharacter};
use crate::cochain::{inverse_cocycle, product_cocycle, Cochain, CochainEntry};
use crate::error::{Error, Result};
use crate::etale::{lagrangian_character, lagrangian_data, DatumJson, LagrangianDatum};
use crate::group::GroupTable;
use crate::Cyc;

/// Default bound on |G|.
pub const MODULAR_BOUND: usize = 8;

#[derive(Clone, Debug)]
pub struct ModularInvariant {
    /// Lagrangian datum (U, γ) in G × G.
    pub datum: LagrangianDatum,
    /// Z[i][j] = multiplicity of χ_i ⊠ ψ_j, with χ_i simple in Z(G, α) and
    /// ψ_j simple in Z(G, α⁻¹).
    pub matrix: Vec<Vec<u64>>,
}

/// The three centres and the identification of product simples.
pub struct ProductCentre {
    pub left: Centre,
    pub right: Centre,
    pub product: Centre,
    /// pairing[i][j] = index of χ_i ⊠ ψ_j among the simples of the product.
    pub pairing: Vec<Vec<usize>>,
}

impl ProductCentre {
    pub fn new(alpha: &Cochain) -> Result<ProductCentre> {
        Self::bounded(alpha, MODULAR_BOUND)
    }

    pub fn bounded(alpha: &Cochain, bound: usize) -> Result<ProductCentre> {
        let n = alpha.group().order();
        if n > bound {
            return Err(Error::SizeLimitExceeded { what: "group order", size: n, limit: bound });
        }
        let beta = inverse_cocycle(alpha);
        let (_, ab) = product_cocycle(alpha, &beta);
        let left = Centre::new(alpha)?;
        let right = Centre::new(&beta)?;
        let product = Centre::new(&ab)?;
        let (l, r) = (left.simple_characters().len(), right.simple_characters().len());
        if l * r != product.simple_characters().len() {
            return Err(Error::NotACharacter(format!(
                "{} x {} outer products for {} simples of the product",
                l,
                r,
                product.simple_characters().len()
            )));
        }
        let mut pairing = vec![vec![0; r]; l];
        let mut used = vec![false; l * r];
        for (i, chi) in left.simple_characters().iter().enumerate() {
            for (j, psi) in right.simple_characters().iter().enumerate() {
                let outer = outer_product(&product, n, chi, psi);
                let k = product
                    .simple_characters()
                    .iter()
                    .position(|s| s == &outer)
                    .ok_or_else(|| Error::NotACharacter(format!("outer product ({i},{j}) is not simple")))?;
                if used[k] {
                    return Err(Error::NotACharacter(format!("outer product ({i},{j}) repeats simple {k}")));
                }
                used[k] = true;
                pairing[i][j] = k;
            }
        }
        Ok(ProductCentre { left, right, product, pairing })
    }

    /// Z_ij for one Lagrangian datum of the product.
    pub fn invariant(&self, datum: &LagrangianDatum) -> Result<ModularInvariant> {
        let chi = lagrangian_character(&self.product, datum)?;
        let mult = self.product.decompose(&chi)?;
        let matrix = self.pairing.iter().map(|row| row.iter().map(|&k| mult[k]).collect()).collect();
        Ok(ModularInvariant { datum: datum.clone(), matrix })
    }
}

/// (χ ⊠ ψ)((f₁,f₂),(g₁,g₂)) = χ(f₁,g₁) ψ(f₂,g₂) with (a,b) at index a·|G| + b.
pub fn outer_product(product: &Centre, n: usize, chi: &CentreCharacter, psi: &CentreCharacter) -> CentreCharacter {
    product.character_from_fn(|f, g| {
        let a = chi.get(f / n, g / n);
        if a.is_zero() {
            return Cyc::zero(1);
        }
        &a * &psi.get(f % n, g % n)
    })
}

/// All physical modular invariants, one per Lagrangian datum of
/// Z(G × G, α × α⁻¹), in the order of [`lagrangian_data`].
pub fn physical_invariants(alpha: &Cochain) -> Result<Vec<ModularInvariant>> {
    physical_invariants_bounded(alpha, MODULAR_BOUND)
}

pub fn physical_invariants_bounded(alpha: &Cochain, bound: usize) -> Result<Vec<ModularInvariant>> {
    let pc = ProductCentre::bounded(alpha, bound)?;
    invariants_of(&pc)
}

pub fn invariants_of(pc: &ProductCentre) -> Result<Vec<ModularInvariant>> {
    let data = lagrangian_data(pc.product.alpha())?;
    data.par_iter().map(|d| pc.invariant(d)).collect()
}

/// The diagonal {(g,g)} ⊂ G × G.
pub fn diagonal(g: &Arc<GroupTable>, product: &Arc<GroupTable>) -> crate::Subgroup {
    let n = g.order();
    crate::Subgroup::new(product.clone(), (0..n).map(|x| x * n + x).collect()).expect("diagonal subgroup")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantJson {
    #[serde(rename = "U")]
    pub u: Vec<usize>,
    pub gamma: Vec<CochainEntry>,
    pub matrix: Vec<Vec<u64>>,
}

/// `{"simples": [...], "dual_simples": [...], "invariants": [...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub simples: Vec<String>,
    pub dual_simples: Vec<String>,
    pub invariants: Vec<InvariantJson>,
}

pub fn invariant_report(pc: &ProductCentre, invariants: &[ModularInvariant], ascii: bool) -> InvariantReport {
    InvariantReport {
        simples: pc.left.simple_names(ascii),
        dual_simples: pc.right.simple_names(ascii),
        invariants: invariants
            .iter()
            .map(|m| {
                let DatumJson { h, gamma, .. } = m.datum.to_json();
                InvariantJson { u: h, gamma, matrix: m.matrix.clone() }
            })
            .collect(),
    }
}

impl InvariantReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// One line per matrix row: `invariant,U,gamma,row,Z_row0,Z_row1,…`, with U
    /// space separated and gamma as `a b=p/q` items separated by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("invariant,U,gamma,row");
        for s in &self.dual_simples {
            out.push(',');
            out.push_str(s);
        }
        out.push('\n');
        for (k, inv) in self.invariants.iter().enumerate() {
            let u: Vec<String> = inv.u.iter().map(|x| x.to_string()).collect();
            let gamma: Vec<String> =
                inv.gamma.iter().map(|e| format!("{} {}={}", e.args[0], e.args[1], e.phase)).collect();
            for (i, row) in inv.matrix.iter().enumerate() {
                out.push_str(&format!("{k},{},{},{}", u.join(" "), gamma.join(";"), self.simples[i]));
                for v in row {
                    out.push_str(&format!(",{v}"));
                }
                out.push('\n');
            }
        }
        out
    }

    pub fn from_csv(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("invariant csv: {m}"));
        let mut lines = s.lines();
        let header: Vec<&str> = lines.next().ok_or_else(|| bad("empty"))?.split(',').collect();
        if header.len() < 4 || header[..4] != ["invariant", "U", "gamma", "row"] {
            return Err(bad("header"));
        }
        let dual_simples: Vec<String> = header[4..].iter().map(|s| s.to_string()).collect();
        let mut simples: Vec<String> = Vec::new();
        let mut invariants: Vec<InvariantJson> = Vec::new();
        for line in lines.filter(|l| !l.is_empty()) {
            let cells: Vec<&str> = line.split(',').collect();
            if cells.len() != 4 + dual_simples.len() {
                return Err(bad("row width"));
            }
            let k: usize = cells[0].parse().map_err(|_| bad("invariant index"))?;
            if k == invariants.len() {
                let u = cells[1]
                    .split_whitespace()
                    .map(|x| x.parse().map_err(|_| bad("U")))
                    .collect::<Result<Vec<usize>>>()?;
                let gamma = cells[2]
                    .split(';')
                    .filter(|x| !x.is_empty())
                    .map(|item| {
                        let (args, phase) = item.split_once('=').ok_or_else(|| bad("gamma"))?;
                        let args = args
                            .split_whitespace()
                            .map(|x| x.parse().map_err(|_| bad("gamma")))
                            .collect::<Result<Vec<usize>>>()?;
                        Ok(CochainEntry { args, phase: phase.parse().map_err(|_| bad("phase"))? })
                    })
                    .collect::<Result<Vec<_>>>()?;
                invariants.push(InvariantJson { u, gamma, matrix: Vec::new() });
            } else if k + 1 != invariants.len() {
                return Err(bad("invariant order"));
            }
            let inv = invariants.last_mut().unwrap();
            if k == 0 {
                simples.push(cells[3].to_string());
            }
            let row = cells[4..].iter().map(|x| x.parse().map_err(|_| bad("entry"))).collect::<Result<Vec<u64>>>()?;
            inv.matrix.push(row);
        }
        Ok(InvariantReport { simples, dual_simples, invariants })
    }
}
