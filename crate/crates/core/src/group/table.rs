use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group given by its multiplication table. Index 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    names: Vec<String>,
}

/// JSON shape `{"order": n, "table": [[...]], "names": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub names: Vec<String>,
}

impl GroupTable {
    /// Validate and build a group from an explicit table.
    pub fn from_multiplication_table(table: Vec<Vec<usize>>, names: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::MalformedTable);
        }
        if !names.is_empty() && names.len() != n {
            return Err(Error::MalformedTable);
        }
        for g in 0..n {
            if table[0][g] != g || table[g][0] != g {
                return Err(Error::NoIdentity);
            }
        }
        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            match (0..n).find(|&h| table[g][h] == 0 && table[h][g] == 0) {
                Some(h) => inv[g] = h,
                None => return Err(Error::NoInverse(g)),
            }
        }
        let mut seen = vec![false; n];
        for g in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for h in 0..n {
                if std::mem::replace(&mut seen[table[g][h]], true) {
                    return Err(Error::NotAPermutationRow(g));
                }
            }
            seen.iter_mut().for_each(|s| *s = false);
            for h in 0..n {
                if std::mem::replace(&mut seen[table[h][g]], true) {
                    return Err(Error::NotAPermutationRow(g));
                }
            }
        }
        let mul: Vec<usize> = table.into_iter().flatten().collect();
        for a in 0..n {
            for b in 0..n {
                let ab = mul[a * n + b];
                for c in 0..n {
                    if mul[ab * n + c] != mul[a * n + mul[b * n + c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let names = if names.is_empty() {
            (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") }).collect()
        } else {
            names
        };
        Ok(GroupTable { n, mul, inv, names })
    }

    /// Build without validation; the caller guarantees the group axioms.
    pub(crate) fn from_trusted(n: usize, mul: Vec<usize>, names: Vec<String>) -> Self {
        let mut inv = vec![0; n];
        for g in 0..n {
            inv[g] = (0..n).find(|&h| mul[g * n + h] == 0).expect("inverse");
        }
        GroupTable { n, mul, inv, names }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// x g x⁻¹.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inv[x])
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let o = self.element_order(a) as i64;
        let k = k.rem_euclid(o);
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.n).fold(1, |e, a| e.lcm(&self.element_order(a)))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.commute(a, b)))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            order: self.n,
            table: self.rows(),
            names: self.names.clone(),
        }
    }

    pub fn from_json(j: GroupJson) -> Result<Self> {
        if j.table.len() != j.order {
            return Err(Error::MalformedTable);
        }
        Self::from_multiplication_table(j.table, j.names)
    }

    /// Direct product; element (a, b) has index a·|other| + b.
    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        let mut mul = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let a = self.mul(x / n2, y / n2);
                let b = other.mul(x % n2, y % n2);
                mul[x * n + y] = a * n2 + b;
            }
        }
        let names = (0..n)
            .map(|x| {
                if x == 0 {
                    "e".to_string()
                } else {
                    format!("({},{})", self.names[x / n2], other.names[x % n2])
                }
            })
            .collect();
        GroupTable::from_trusted(n, mul, names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_table() {
        let g = GroupTable::from_multiplication_table(vec![vec![0]], vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.name(0), "e");
    }

    #[test]
    fn rejects_bad_tables() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert_eq!(GroupTable::from_multiplication_table(t, vec![]), Err(Error::NoInverse(1)));
        let t = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(GroupTable::from_multiplication_table(t, vec![]), Err(Error::NoIdentity));
        let t = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]];
        assert!(matches!(
            GroupTable::from_multiplication_table(t, vec![]),
            Err(Error::NotAPermutationRow(_))
        ));
        let t = vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 1, 2, 0]];
        assert!(GroupTable::from_multiplication_table(t, vec![]).is_err());
        let t = vec![vec![0, 1], vec![1, 5]];
        assert_eq!(GroupTable::from_multiplication_table(t, vec![]), Err(Error::MalformedTable));
    }

    #[test]
    fn non_associative_loop() {
        // a Latin square with identity that is not a group (order 5 loop)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            GroupTable::from_multiplication_table(t, vec![]),
            Err(Error::NotAssociative(..))
        ));
    }
}
