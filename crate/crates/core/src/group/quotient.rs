use std::sync::Arc;

use crate::error::{Error, Result};

use super::subgroup::Subgroup;
use super::table::GroupTable;

/// H/F together with a section s: H/F → H and the projection H → H/F.
#[derive(Clone, Debug)]
pub struct QuotientWithSection {
    pub quotient: Arc<GroupTable>,
    /// quotient index → element of the parent group (lying in H)
    pub section: Vec<usize>,
    /// parent element → quotient index, `None` outside H
    pub projection: Vec<Option<usize>>,
}

impl QuotientWithSection {
    pub fn project(&self, h: usize) -> usize {
        self.projection[h].expect("element of H")
    }

    /// Same quotient with a different choice of coset representatives.
    pub fn with_section(&self, section: Vec<usize>) -> Result<Self> {
        if section.len() != self.section.len()
            || section[0] != 0
            || section.iter().enumerate().any(|(i, &h)| self.projection.get(h).copied().flatten() != Some(i))
        {
            return Err(Error::InvalidDatum("section does not pick one element per coset".into()));
        }
        Ok(QuotientWithSection { section, ..self.clone() })
    }
}

/// Quotient H/F with cosets ordered by their least element, which is the
/// chosen representative.
pub fn quotient_with_section(h: &Subgroup, f: &Subgroup) -> Result<QuotientWithSection> {
    if !f.is_normal_in(h) {
        return Err(Error::NotNormal);
    }
    let g = h.parent();
    let mut projection = vec![None; g.order()];
    let mut section = Vec::new();
    for &x in h.elements() {
        if projection[x].is_some() {
            continue;
        }
        let idx = section.len();
        section.push(x);
        for &y in f.elements() {
            projection[g.mul(x, y)] = Some(idx);
        }
    }
    let m = section.len();
    let mut mul = vec![0; m * m];
    for i in 0..m {
        for j in 0..m {
            mul[i * m + j] = projection[g.mul(section[i], section[j])].unwrap();
        }
    }
    let names = section
        .iter()
        .enumerate()
        .map(|(i, &x)| if i == 0 { "e".to_string() } else { format!("{}F", g.name(x)) })
        .collect();
    Ok(QuotientWithSection {
        quotient: Arc::new(GroupTable::from_trusted(m, mul, names)),
        section,
        projection,
    })
}
