//! Simple objects and characters of the twisted Drinfeld centre Z(G, α).
//!
//! Characters are functions on commuting pairs (f, g). All multipliers are
//! written additively: a phase p stands for exp(2πi·p).

mod render;

use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cochain::{Cochain, Transgressions};
use crate::error::{Error, Result};
use crate::group::{centralizer, conjugacy_classes, Classes, GroupTable, Subgroup};
use crate::projective::{projective_character_table, ProjectiveTable};
use crate::scalars::Phase;
use crate::Cyc;

pub use render::{decomposition_string, CentreTableJson, RowJson};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Commuting pairs of a group with a dense lookup.
#[derive(Debug)]
pub struct PairIndex {
    id: u64,
    n: usize,
    pairs: Vec<(usize, usize)>,
    index: Vec<usize>,
}

impl PairIndex {
    fn new(g: &GroupTable) -> Self {
        let n = g.order();
        let mut index = vec![usize::MAX; n * n];
        let mut pairs = Vec::new();
        for f in 0..n {
            for x in 0..n {
                if g.commute(f, x) {
                    index[f * n + x] = pairs.len();
                    pairs.push((f, x));
                }
            }
        }
        PairIndex { id: NEXT_ID.fetch_add(1, AtomicOrdering::Relaxed), n, pairs, index }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn get(&self, f: usize, g: usize) -> Option<usize> {
        match self.index[f * self.n + g] {
            usize::MAX => None,
            i => Some(i),
        }
    }
}

/// A function on commuting pairs; lookups at other pairs give zero.
#[derive(Clone, Debug)]
pub struct CentreCharacter {
    pairs: Arc<PairIndex>,
    values: Vec<Cyc>,
}

impl PartialEq for CentreCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.pairs.id == other.pairs.id && self.values == other.values
    }
}

impl CentreCharacter {
    pub fn get(&self, f: usize, g: usize) -> Cyc {
        match self.pairs.get(f, g) {
            Some(i) => self.values[i].clone(),
            None => Cyc::zero(1),
        }
    }

    pub fn values(&self) -> &[Cyc] {
        &self.values
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        self.pairs.pairs()
    }

    /// Least N with every value in ℚ(ζ_N).
    pub fn root_order(&self) -> u64 {
        self.values.iter().map(crate::scalars::display::conductor).fold(1, num_integer::lcm)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyc::is_zero)
    }

    pub fn add(&self, other: &CentreCharacter) -> Result<CentreCharacter> {
        self.same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(CentreCharacter { pairs: self.pairs.clone(), values })
    }

    pub fn scale(&self, k: i64) -> CentreCharacter {
        let c = BigRational::from_integer(BigInt::from(k));
        CentreCharacter { pairs: self.pairs.clone(), values: self.values.iter().map(|v| v.scale(&c)).collect() }
    }

    fn same(&self, other: &CentreCharacter) -> Result<()> {
        if self.pairs.id != other.pairs.id {
            return Err(Error::MismatchedContext);
        }
        Ok(())
    }
}

/// A simple object: the class representative f and an index into the
/// projective character table of C_G(f).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleLabel {
    pub class_rep: usize,
    pub char_index: usize,
}

/// Data attached to one conjugacy class of G.
#[derive(Clone, Debug)]
pub struct Sector {
    pub rep: usize,
    pub centralizer: Subgroup,
    /// μ(a, b) = −α(a, b | f) on the local table of C_G(f).
    pub twist: Cochain,
    pub table: ProjectiveTable,
}

/// The context (G, α) with everything needed to work with characters.
pub struct Centre {
    group: Arc<GroupTable>,
    alpha: Cochain,
    trans: Transgressions,
    classes: Classes,
    pairs: Arc<PairIndex>,
    sectors: Vec<Sector>,
    /// For each f, some y with y·rep·y⁻¹ = f.
    transversal: Vec<usize>,
    labels: Vec<SimpleLabel>,
    simples: Vec<CentreCharacter>,
}

impl std::fmt::Debug for Centre {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Centre(|G| = {}, {} simples)", self.group.order(), self.labels.len())
    }
}

impl Centre {
    pub fn new(alpha: &Cochain) -> Result<Centre> {
        if alpha.degree() != 3 {
            return Err(Error::DegreeUnsupported(alpha.degree()));
        }
        if !alpha.is_cocycle() {
            return Err(Error::NotACocycle);
        }
        let group = alpha.group().clone();
        let n = group.order();
        let trans = Transgressions::new(alpha);
        let classes = conjugacy_classes(&group);
        let pairs = Arc::new(PairIndex::new(&group));
        let mut transversal = vec![usize::MAX; n];
        for &rep in &classes.representatives() {
            for y in 0..n {
                let f = group.conj(y, rep);
                if transversal[f] == usize::MAX {
                    transversal[f] = y;
                }
            }
        }
        let sectors = classes
            .representatives()
            .into_par_iter()
            .map(|rep| {
                let c = centralizer(&group, rep);
                let local = c.table();
                let els = c.elements().to_vec();
                let twist = Cochain::from_fn(local.clone(), 2, |a| -trans.right(els[a[0]], els[a[1]], rep));
                let table = projective_character_table(&local, &twist)?;
                Ok(Sector { rep, centralizer: c, twist, table })
            })
            .collect::<Result<Vec<_>>>()?;
        let labels: Vec<SimpleLabel> = sectors
            .iter()
            .flat_map(|s| (0..s.table.len()).map(move |i| SimpleLabel { class_rep: s.rep, char_index: i }))
            .collect();
        let mut centre = Centre {
            group,
            alpha: alpha.clone(),
            trans,
            classes,
            pairs,
            sectors,
            transversal,
            labels,
            simples: Vec::new(),
        };
        centre.simples = centre.labels.par_iter().map(|l| centre.induce(l)).collect();
        Ok(centre)
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn alpha(&self) -> &Cochain {
        &self.alpha
    }

    pub fn transgressions(&self) -> &Transgressions {
        &self.trans
    }

    pub fn classes(&self) -> &Classes {
        &self.classes
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn pair_index(&self) -> &Arc<PairIndex> {
        &self.pairs
    }

    pub fn simple_objects(&self) -> &[SimpleLabel] {
        &self.labels
    }

    pub fn simple_characters(&self) -> &[CentreCharacter] {
        &self.simples
    }

    pub fn simple_character(&self, label: &SimpleLabel) -> Result<&CentreCharacter> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| &self.simples[i])
            .ok_or_else(|| Error::InvalidDatum(format!("no simple object {label:?}")))
    }

    /// Total dimension Σ_f χ(f, e) of the object with character χ.
    pub fn dimension(&self, chi: &CentreCharacter) -> Result<u64> {
        let mut s = Cyc::zero(1);
        for f in 0..self.group.order() {
            s = &s + &chi.get(f, 0);
        }
        let r = s.to_rational().ok_or(Error::NonRationalResult)?;
        if !r.is_integer() || r.is_negative() {
            return Err(Error::NotACharacter(format!("dimension {r}")));
        }
        r.to_integer().to_u64().ok_or(Error::Overflow)
    }

    /// Dimensions of the simple objects.
    pub fn dimensions(&self) -> Vec<u64> {
        self.simples.iter().map(|c| self.dimension(c).expect("simple characters are genuine")).collect()
    }

    fn sector_of(&self, rep: usize) -> &Sector {
        &self.sectors[self.classes.class_of[rep]]
    }

    /// Builds a character from a function on pairs.
    pub fn character_from_fn(&self, f: impl Fn(usize, usize) -> Cyc + Sync) -> CentreCharacter {
        let values = self.pairs.pairs.par_iter().map(|&(a, b)| f(a, b)).collect();
        CentreCharacter { pairs: self.pairs.clone(), values }
    }

    pub fn zero_character(&self) -> CentreCharacter {
        self.character_from_fn(|_, _| Cyc::zero(1))
    }

    /// Values on commuting pairs in the order of `pairs()`.
    pub fn character_from_values(&self, values: Vec<Cyc>) -> Result<CentreCharacter> {
        if values.len() != self.pairs.len() {
            return Err(Error::InvalidDatum("wrong number of character values".into()));
        }
        Ok(CentreCharacter { pairs: self.pairs.clone(), values })
    }

    /// Extends values given on [`Centre::display_pairs`] to every commuting
    /// pair by χ(xfx⁻¹, xgx⁻¹) = ζ^{conjugation_phase(x,f,g)} χ(f,g).
    pub fn character_from_display_values(&self, values: Vec<Cyc>) -> Result<CentreCharacter> {
        let shown = self.display_pairs();
        if values.len() != shown.len() {
            return Err(Error::InvalidDatum("wrong number of character values".into()));
        }
        let g = &self.group;
        let n = g.order();
        let mut out: Vec<Option<Cyc>> = vec![None; self.pairs.len()];
        for ((f, h), v) in shown.into_iter().zip(values) {
            for x in 0..n {
                let i = self.pairs.get(g.conj(x, f), g.conj(x, h)).expect("conjugate of a commuting pair");
                if out[i].is_none() {
                    out[i] = Some(v.mul_phase(self.conjugation_phase(x, f, h)));
                }
            }
        }
        let values = out.into_iter().collect::<Option<Vec<Cyc>>>().ok_or_else(|| Error::InvalidDatum("pair orbit not covered".into()))?;
        self.character_from_values(values)
    }

    /// Induction of a simple object of Z(C_G(f), α) supported on f: only
    /// the coset y·C_G(f) with y⁻¹f'y = f contributes.
    fn induce(&self, label: &SimpleLabel) -> CentreCharacter {
        let g = &self.group;
        let sector = self.sector_of(label.class_rep);
        let row = &sector.table.rows[label.char_index];
        let class = self.classes.class_of[label.class_rep];
        self.character_from_fn(|f, x| {
            if self.classes.class_of[f] != class {
                return Cyc::zero(1);
            }
            let y = self.transversal[f];
            let yi = g.inv(y);
            let u = g.conj(yi, x);
            let phase = self.trans.right(u, yi, f) - self.trans.right(yi, x, f);
            let local = sector.centralizer.local_index(u).expect("conjugate lies in the centralizer");
            row[local].mul_phase(phase)
        })
    }

    /// The multiplier relating χ(xfx⁻¹, xgx⁻¹) to χ(f, g).
    pub fn conjugation_phase(&self, x: usize, f: usize, g: usize) -> Phase {
        self.trans.right(x, g, f) - self.trans.right(self.group.conj(x, g), x, f)
    }

    /// The first pair and conjugator at which the projective class-function
    /// property fails.
    pub fn class_function_failure(&self, chi: &CentreCharacter) -> Option<(usize, usize, usize)> {
        let g = &self.group;
        let n = g.order();
        self.pairs
            .pairs
            .par_iter()
            .enumerate()
            .flat_map_iter(|(i, &(f, h))| (0..n).map(move |x| (i, f, h, x)))
            .find_first(|&(i, f, h, x)| {
                let lhs = chi.get(g.conj(x, f), g.conj(x, h));
                lhs != chi.values[i].mul_phase(self.conjugation_phase(x, f, h))
            })
            .map(|(_, f, h, x)| (f, h, x))
    }

    pub fn is_class_function(&self, chi: &CentreCharacter) -> bool {
        chi.pairs.id == self.pairs.id && self.class_function_failure(chi).is_none()
    }

    fn check(&self, chi: &CentreCharacter) -> Result<()> {
        if chi.pairs.id != self.pairs.id {
            return Err(Error::MismatchedContext);
        }
        Ok(())
    }

    /// (χξ)(f,g) = Σ_{f₁f₂=f, f_i g = g f_i} α(g|f₁,f₂) χ(f₁,g) ξ(f₂,g).
    pub fn product(&self, chi: &CentreCharacter, xi: &CentreCharacter) -> Result<CentreCharacter> {
        self.check(chi)?;
        self.check(xi)?;
        let g = &self.group;
        let n = g.order();
        Ok(self.character_from_fn(|f, x| {
            let mut s = Cyc::zero(1);
            for f1 in 0..n {
                if !g.commute(f1, x) {
                    continue;
                }
                let f2 = g.mul(g.inv(f1), f);
                let a = chi.get(f1, x);
                if a.is_zero() {
                    continue;
                }
                let b = xi.get(f2, x);
                if b.is_zero() {
                    continue;
                }
                s = &s + &(&a * &b).mul_phase(self.trans.left(x, f1, f2));
            }
            s
        }))
    }

    /// χ^∨(f,g) = α(g⁻¹,g|f⁻¹) / α(g|f,f⁻¹) · χ(f⁻¹,g⁻¹).
    pub fn dual(&self, chi: &CentreCharacter) -> Result<CentreCharacter> {
        self.check(chi)?;
        let g = &self.group;
        Ok(self.character_from_fn(|f, x| {
            let (fi, xi) = (g.inv(f), g.inv(x));
            let phase = self.trans.right(xi, x, fi) - self.trans.left(x, f, fi);
            chi.get(fi, xi).mul_phase(phase)
        }))
    }

    /// (χ,ψ) = (1/|G|) Σ_{fg=gf} α(g⁻¹,g|f) χ(f,g⁻¹) ψ(f,g).
    pub fn scalar_product(&self, chi: &CentreCharacter, psi: &CentreCharacter) -> Result<BigRational> {
        self.check(chi)?;
        self.check(psi)?;
        let g = &self.group;
        let total = self
            .pairs
            .pairs
            .par_iter()
            .enumerate()
            .map(|(i, &(f, x))| {
                let b = &psi.values[i];
                if b.is_zero() {
                    return Cyc::zero(1);
                }
                let xi = g.inv(x);
                (&chi.get(f, xi) * b).mul_phase(self.trans.right(xi, x, f))
            })
            .reduce(|| Cyc::zero(1), |a, b| &a + &b);
        let r = total.to_rational().ok_or(Error::NonRationalResult)?;
        Ok(r / BigRational::from_integer(BigInt::from(g.order())))
    }

    /// Multiplicities of the simples in χ, with exact reconstruction.
    pub fn decompose(&self, chi: &CentreCharacter) -> Result<Vec<u64>> {
        self.check(chi)?;
        let mut mult = Vec::with_capacity(self.simples.len());
        for s in &self.simples {
            let m = self.scalar_product(s, chi)?;
            if !m.is_integer() || m.is_negative() {
                return Err(Error::NotACharacter(format!("multiplicity {m}")));
            }
            mult.push(m.to_integer().to_u64().ok_or(Error::Overflow)?);
        }
        let mut rebuilt = self.zero_character();
        for (m, s) in mult.iter().zip(&self.simples) {
            if *m != 0 {
                rebuilt = rebuilt.add(&s.scale(*m as i64))?;
            }
        }
        if rebuilt.values != chi.values {
            return Err(Error::NotACharacter("reconstruction mismatch".into()));
        }
        Ok(mult)
    }

    /// Columns for display: for each class representative f, the smallest
    /// element of each C_G(f)-class.
    pub fn display_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for s in &self.sectors {
            let mut reps: Vec<usize> =
                crate::group::classes_within(&s.centralizer).into_iter().map(|c| c[0]).collect();
            reps.sort_unstable();
            out.extend(reps.into_iter().map(|x| (s.rep, x)));
        }
        out
    }

    pub fn label_name(&self, label: &SimpleLabel) -> String {
        format!("({}, {})", self.group.name(label.class_rep), label.char_index)
    }
}
