//! Finite groups as explicit tables.

pub mod builtin;
pub mod quotient;
pub mod subgroup;
pub mod table;

pub use builtin::{builtin_group, GroupSpec};
pub use quotient::{quotient_with_section, QuotientWithSection};
pub use subgroup::{
    all_subgroups, centralizer, classes_within, commuting_pairs, conjugacy_classes, every_subgroup,
    normal_subgroups_of, Classes, Subgroup, DEFAULT_SUBGROUP_BOUND,
};
pub use table::{GroupJson, GroupTable};

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn d3() -> Arc<GroupTable> {
        Arc::new(builtin::dihedral(3))
    }

    #[test]
    fn d3_classes() {
        let g = d3();
        let c = conjugacy_classes(&g);
        assert_eq!(c.classes, vec![vec![0], vec![1, 2], vec![3, 4, 5]]);
        let c4 = conjugacy_classes(&builtin::cyclic(4));
        assert_eq!(c4.len(), 4);
        assert_eq!(conjugacy_classes(&builtin::cyclic(1)).classes, vec![vec![0]]);
    }

    #[test]
    fn centralizers_and_pairs() {
        let g = d3();
        assert_eq!(centralizer(&g, 1).elements(), &[0, 1, 2]);
        assert_eq!(centralizer(&g, 0).order(), 6);
        let brute = (0..6).flat_map(|a| (0..6).map(move |b| (a, b))).filter(|&(a, b)| g.commute(a, b)).count();
        assert_eq!(commuting_pairs(&g).len(), brute);
        assert_eq!(brute, 18);
    }

    #[test]
    fn d3_subgroups() {
        let g = d3();
        let subs = all_subgroups(&g, DEFAULT_SUBGROUP_BOUND).unwrap();
        let els: Vec<Vec<usize>> = subs.iter().map(|s| s.elements().to_vec()).collect();
        assert_eq!(els, vec![vec![0], vec![0, 3], vec![0, 1, 2], vec![0, 1, 2, 3, 4, 5]]);
        let whole = Subgroup::whole(g.clone());
        let normal: Vec<usize> = normal_subgroups_of(&whole).iter().map(|s| s.order()).collect();
        assert_eq!(normal, vec![1, 3, 6]);
        let triv = Arc::new(builtin::cyclic(1));
        assert_eq!(all_subgroups(&triv, 64).unwrap().len(), 1);
    }

    #[test]
    fn representatives_pairwise_non_conjugate() {
        for spec in ["symmetric:4", "q8", "dihedral:4", "product:cyclic:2,cyclic:2"] {
            let g = Arc::new(builtin_group(&spec.parse().unwrap()).unwrap());
            let subs = all_subgroups(&g, 64).unwrap();
            for (i, a) in subs.iter().enumerate() {
                for b in &subs[i + 1..] {
                    assert!((0..g.order()).all(|x| a.conjugate(x) != *b), "{spec}");
                }
            }
            let total: usize = subs
                .iter()
                .map(|s| g.order() / s.normalizer().order())
                .sum();
            assert_eq!(total, every_subgroup(&g, 64).unwrap().len(), "{spec}");
        }
        let s4 = Arc::new(builtin::symmetric(4));
        assert_eq!(all_subgroups(&s4, 64).unwrap().len(), 11);
        assert_eq!(every_subgroup(&s4, 64).unwrap().len(), 30);
    }

    #[test]
    fn quotients() {
        let g = d3();
        let whole = Subgroup::whole(g.clone());
        let c3 = Subgroup::new(g.clone(), vec![0, 1, 2]).unwrap();
        let triv = Subgroup::trivial(g.clone());
        let q = quotient_with_section(&whole, &c3).unwrap();
        assert_eq!(q.quotient.order(), 2);
        assert_eq!(q.section, vec![0, 3]);
        let q = quotient_with_section(&whole, &whole).unwrap();
        assert_eq!(q.quotient.order(), 1);
        let q = quotient_with_section(&whole, &triv).unwrap();
        assert_eq!(q.section, (0..6).collect::<Vec<_>>());
        let c2 = Subgroup::new(g.clone(), vec![0, 3]).unwrap();
        assert!(quotient_with_section(&whole, &c2).is_err());
    }
}
