use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

use super::table::GroupTable;

pub const DEFAULT_SUBGROUP_BOUND: usize = 64;

/// A subgroup, stored as the sorted list of its elements in the parent.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<GroupTable>,
    elements: Vec<usize>,
    local: Vec<usize>,
    table: OnceLock<Arc<GroupTable>>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.elements.iter().map(|&g| self.parent.name(g)).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
            && (Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent)
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// Checks closure; `elements` need not be sorted.
    pub fn new(parent: Arc<GroupTable>, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let n = parent.order();
        if elements.first() != Some(&0) || elements.iter().any(|&g| g >= n) {
            return Err(Error::NotASubgroup);
        }
        let mut mask = vec![false; n];
        for &g in &elements {
            mask[g] = true;
        }
        for &a in &elements {
            if !mask[parent.inv(a)] || elements.iter().any(|&b| !mask[parent.mul(a, b)]) {
                return Err(Error::NotASubgroup);
            }
        }
        Ok(Self::trusted(parent, elements))
    }

    pub(crate) fn trusted(parent: Arc<GroupTable>, elements: Vec<usize>) -> Self {
        let mut local = vec![usize::MAX; parent.order()];
        for (i, &g) in elements.iter().enumerate() {
            local[g] = i;
        }
        Subgroup {
            parent,
            elements,
            local,
            table: OnceLock::new(),
        }
    }

    pub fn whole(parent: Arc<GroupTable>) -> Self {
        let els = (0..parent.order()).collect();
        Self::trusted(parent, els)
    }

    pub fn trivial(parent: Arc<GroupTable>) -> Self {
        Self::trusted(parent, vec![0])
    }

    pub fn generated(parent: Arc<GroupTable>, gens: &[usize]) -> Self {
        let els = closure(&parent, &[0], gens);
        Self::trusted(parent, els)
    }

    pub fn parent(&self) -> &Arc<GroupTable> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, g: usize) -> bool {
        self.local[g] != usize::MAX
    }

    /// Position of a parent element inside `elements`.
    pub fn local_index(&self, g: usize) -> Option<usize> {
        match self.local[g] {
            usize::MAX => None,
            i => Some(i),
        }
    }

    /// The subgroup as a group in its own right; local index i is `elements[i]`.
    pub fn table(&self) -> Arc<GroupTable> {
        self.table
            .get_or_init(|| {
                let m = self.elements.len();
                let mut mul = vec![0; m * m];
                for (i, &a) in self.elements.iter().enumerate() {
                    for (j, &b) in self.elements.iter().enumerate() {
                        mul[i * m + j] = self.local[self.parent.mul(a, b)];
                    }
                }
                let names = self.elements.iter().map(|&g| self.parent.name(g).to_string()).collect();
                Arc::new(GroupTable::from_trusted(m, mul, names))
            })
            .clone()
    }

    /// x K x⁻¹.
    pub fn conjugate(&self, x: usize) -> Subgroup {
        let mut els: Vec<usize> = self.elements.iter().map(|&g| self.parent.conj(x, g)).collect();
        els.sort_unstable();
        Self::trusted(self.parent.clone(), els)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    /// Whether self ⊴ other.
    pub fn is_normal_in(&self, other: &Subgroup) -> bool {
        self.is_subgroup_of(other)
            && other
                .elements
                .iter()
                .all(|&x| self.elements.iter().all(|&g| self.contains(self.parent.conj(x, g))))
    }

    /// Lexicographically least element list among the conjugates.
    pub fn canonical_conjugate(&self) -> Subgroup {
        (0..self.parent.order())
            .map(|x| self.conjugate(x))
            .min_by(|a, b| a.elements.cmp(&b.elements))
            .unwrap()
    }

    pub fn normalizer(&self) -> Subgroup {
        let els = (0..self.parent.order())
            .filter(|&x| self.elements.iter().all(|&g| self.contains(self.parent.conj(x, g))))
            .collect();
        Self::trusted(self.parent.clone(), els)
    }
}

fn closure(g: &GroupTable, start: &[usize], gens: &[usize]) -> Vec<usize> {
    let mut mask = vec![false; g.order()];
    let mut out: Vec<usize> = Vec::new();
    for &s in start.iter().chain(std::iter::once(&0)) {
        if !mask[s] {
            mask[s] = true;
            out.push(s);
        }
    }
    let mut i = 0;
    while i < out.len() {
        let a = out[i];
        for &s in gens.iter().chain(start.iter()) {
            let b = g.mul(a, s);
            if !mask[b] {
                mask[b] = true;
                out.push(b);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Conjugacy classes ordered by smallest element.
#[derive(Clone, Debug)]
pub struct Classes {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl Classes {
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn conjugacy_classes(g: &GroupTable) -> Classes {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let mut c: Vec<usize> = (0..n).map(|x| g.conj(x, a)).collect();
        c.sort_unstable();
        c.dedup();
        for &b in &c {
            class_of[b] = classes.len();
        }
        classes.push(c);
    }
    Classes { classes, class_of }
}

/// Classes of a subgroup H under conjugation by H, in parent indices.
pub fn classes_within(h: &Subgroup) -> Vec<Vec<usize>> {
    let t = h.table();
    conjugacy_classes(&t)
        .classes
        .into_iter()
        .map(|c| c.into_iter().map(|i| h.elements()[i]).collect())
        .collect()
}

pub fn centralizer(g: &Arc<GroupTable>, f: usize) -> Subgroup {
    let els = (0..g.order()).filter(|&x| g.commute(x, f)).collect();
    Subgroup::trusted(g.clone(), els)
}

/// All commuting pairs in lexicographic order.
pub fn commuting_pairs(g: &GroupTable) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n)
        .flat_map(|f| (0..n).map(move |x| (f, x)))
        .filter(|&(f, x)| g.commute(f, x))
        .collect()
}

fn key(els: &[usize], n: usize) -> Vec<u64> {
    let mut k = vec![0u64; n.div_ceil(64)];
    for &g in els {
        k[g / 64] |= 1 << (g % 64);
    }
    k
}

/// Every subgroup (not up to conjugacy), ordered by order then element list.
pub fn every_subgroup(g: &Arc<GroupTable>, bound: usize) -> Result<Vec<Subgroup>> {
    let n = g.order();
    if n > bound {
        return Err(Error::SizeLimitExceeded { what: "group order", size: n, limit: bound });
    }
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut cyclic: Vec<(usize, Vec<usize>)> = Vec::new();
    for a in 0..n {
        let els = closure(g, &[], &[a]);
        if seen.insert(key(&els, n)) {
            cyclic.push((a, els));
        }
    }
    let mut all: Vec<Vec<usize>> = cyclic.iter().map(|c| c.1.clone()).collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for k in &layer {
            let mut mask = vec![false; n];
            k.iter().for_each(|&x| mask[x] = true);
            for (a, _) in &cyclic {
                if mask[*a] {
                    continue;
                }
                let els = closure(g, k, &[*a]);
                if seen.insert(key(&els, n)) {
                    next.push(els);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(all.into_iter().map(|e| Subgroup::trusted(g.clone(), e)).collect())
}

/// Subgroups up to conjugacy, each as its canonical conjugate, ordered by
/// order then element list.
pub fn all_subgroups(g: &Arc<GroupTable>, bound: usize) -> Result<Vec<Subgroup>> {
    let every = every_subgroup(g, bound)?;
    let mut reps: Vec<Subgroup> = Vec::new();
    let mut seen = HashSet::new();
    for s in every {
        let c = s.canonical_conjugate();
        if seen.insert(c.elements().to_vec()) {
            reps.push(c);
        }
    }
    reps.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    Ok(reps)
}

/// Normal subgroups of H, in parent indices.
pub fn normal_subgroups_of(h: &Subgroup) -> Vec<Subgroup> {
    let t = h.table();
    let every = every_subgroup(&t, usize::MAX).expect("no bound");
    let whole = Subgroup::whole(t.clone());
    let mut out: Vec<Subgroup> = every
        .into_iter()
        .filter(|k| k.is_normal_in(&whole))
        .map(|k| {
            let els = k.elements().iter().map(|&i| h.elements()[i]).collect();
            Subgroup::trusted(h.parent().clone(), els)
        })
        .collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    out
}
