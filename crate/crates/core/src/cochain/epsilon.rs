use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::scalars::Phase;

/// A table ε: H × F → ℚ/ℤ, written ε_h(f).
#[derive(Clone, Debug, PartialEq)]
pub struct EpsilonTable {
    h: Subgroup,
    f: Subgroup,
    values: Vec<Phase>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EpsilonEntry {
    pub h: usize,
    pub f: usize,
    pub phase: Phase,
}

impl EpsilonTable {
    pub fn zero(h: Subgroup, f: Subgroup) -> Self {
        let len = h.order() * f.order();
        EpsilonTable { h, f, values: vec![Phase::ZERO; len] }
    }

    /// Tabulate `v(h, f)` over parent indices.
    pub fn from_fn(h: Subgroup, f: Subgroup, v: impl Fn(usize, usize) -> Phase) -> Self {
        let mut t = Self::zero(h, f);
        for (i, &x) in t.h.elements().iter().enumerate() {
            for (j, &y) in t.f.elements().iter().enumerate() {
                t.values[i * t.f.order() + j] = v(x, y);
            }
        }
        t
    }

    pub fn h(&self) -> &Subgroup {
        &self.h
    }

    pub fn f(&self) -> &Subgroup {
        &self.f
    }

    /// ε_h(f) for parent indices h ∈ H, f ∈ F.
    pub fn get(&self, h: usize, f: usize) -> Phase {
        let i = self.h.local_index(h).expect("h in H");
        let j = self.f.local_index(f).expect("f in F");
        self.values[i * self.f.order() + j]
    }

    pub fn set(&mut self, h: usize, f: usize, v: Phase) {
        let i = self.h.local_index(h).expect("h in H");
        let j = self.f.local_index(f).expect("f in F");
        self.values[i * self.f.order() + j] = v;
    }

    pub fn is_normalized(&self) -> bool {
        self.h.elements().iter().all(|&h| self.get(h, 0).is_zero())
            && self.f.elements().iter().all(|&f| self.get(0, f).is_zero())
    }

    pub fn to_json(&self) -> Vec<EpsilonEntry> {
        let mut out = Vec::new();
        for &h in self.h.elements() {
            for &f in self.f.elements() {
                let v = self.get(h, f);
                if !v.is_zero() {
                    out.push(EpsilonEntry { h, f, phase: v });
                }
            }
        }
        out
    }

    pub fn from_json(h: Subgroup, f: Subgroup, entries: &[EpsilonEntry]) -> Result<Self> {
        let mut t = Self::zero(h, f);
        for e in entries {
            if !t.h.contains(e.h) || !t.f.contains(e.f) {
                return Err(Error::Parse(format!("epsilon entry ({}, {}) outside H × F", e.h, e.f)));
            }
            t.set(e.h, e.f, e.phase);
        }
        Ok(t)
    }
}
