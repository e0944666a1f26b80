use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::table::GroupTable;

pub const MAX_BUILTIN_ORDER: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Trivial,
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Quaternion8,
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Trivial => 1,
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Dihedral(n) => 2 * n,
            GroupSpec::Symmetric(n) => (1..=*n).product(),
            GroupSpec::Quaternion8 => 8,
            GroupSpec::Product(a, b) => a.order().saturating_mul(b.order()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Trivial => write!(f, "trivial"),
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::Quaternion8 => write!(f, "quaternion8"),
            GroupSpec::Product(a, b) => write!(f, "product:{a},{b}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<GroupSpec> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown group spec '{s}'"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        if let Some(rest) = s.strip_prefix("product:") {
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            return Ok(GroupSpec::Product(Box::new(a.parse()?), Box::new(b.parse()?)));
        }
        let spec = match s.split_once(':') {
            Some(("cyclic", n)) => GroupSpec::Cyclic(num(n)?),
            Some(("dihedral", n)) => GroupSpec::Dihedral(num(n)?),
            Some(("symmetric", n)) => GroupSpec::Symmetric(num(n)?),
            None if s == "trivial" => GroupSpec::Trivial,
            None if s == "quaternion8" || s == "q8" => GroupSpec::Quaternion8,
            _ => return Err(bad()),
        };
        match spec {
            GroupSpec::Cyclic(0) | GroupSpec::Dihedral(0) | GroupSpec::Symmetric(0) => Err(bad()),
            GroupSpec::Symmetric(n) if n > 5 => Err(Error::SizeLimitExceeded {
                what: "symmetric degree",
                size: n,
                limit: 5,
            }),
            s => Ok(s),
        }
    }
}

/// Deterministic table for a builtin group.
pub fn builtin_group(spec: &GroupSpec) -> Result<GroupTable> {
    let n = spec.order();
    if n > MAX_BUILTIN_ORDER {
        return Err(Error::SizeLimitExceeded {
            what: "group order",
            size: n,
            limit: MAX_BUILTIN_ORDER,
        });
    }
    Ok(match spec {
        GroupSpec::Trivial => cyclic(1),
        GroupSpec::Cyclic(n) => cyclic(*n),
        GroupSpec::Dihedral(n) => dihedral(*n),
        GroupSpec::Symmetric(n) => symmetric(*n),
        GroupSpec::Quaternion8 => quaternion8(),
        GroupSpec::Product(a, b) => builtin_group(a)?.direct_product(&builtin_group(b)?),
    })
}

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

pub fn cyclic(n: usize) -> GroupTable {
    let mul = (0..n * n).map(|x| (x / n + x % n) % n).collect();
    let names = (0..n).map(|k| power_name("a", k)).collect();
    GroupTable::from_trusted(n, mul, names)
}

/// Dihedral group of order 2n; index m·n + k stands for s^m r^k.
pub fn dihedral(n: usize) -> GroupTable {
    let order = 2 * n;
    let mut mul = vec![0; order * order];
    for x in 0..order {
        for y in 0..order {
            let (m1, k1) = (x / n, x % n);
            let (m2, k2) = (y / n, y % n);
            let k1 = if m2 == 1 { (n - k1) % n } else { k1 };
            mul[x * order + y] = ((m1 + m2) % 2) * n + (k1 + k2) % n;
        }
    }
    let names = (0..order)
        .map(|x| {
            let (m, k) = (x / n, x % n);
            match (m, k) {
                (0, _) => power_name("r", k),
                (_, 0) => "s".to_string(),
                _ => format!("s{}", power_name("r", k)),
            }
        })
        .collect();
    GroupTable::from_trusted(order, mul, names)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for i in 0..p.len() {
        if seen[i] || p[i] == i {
            continue;
        }
        s.push('(');
        let mut j = i;
        let mut first = true;
        while !seen[j] {
            seen[j] = true;
            if !first {
                s.push(' ');
            }
            first = false;
            s.push_str(&(j + 1).to_string());
            j = p[j];
        }
        s.push(')');
    }
    if s.is_empty() {
        "e".to_string()
    } else {
        s
    }
}

/// Symmetric group with permutations in lexicographic order; (στ)(i) = σ(τ(i)).
pub fn symmetric(n: usize) -> GroupTable {
    let perms = permutations(n);
    let order = perms.len();
    let index: std::collections::HashMap<Vec<usize>, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut mul = vec![0; order * order];
    for (a, pa) in perms.iter().enumerate() {
        for (b, pb) in perms.iter().enumerate() {
            let c: Vec<usize> = (0..n).map(|i| pa[pb[i]]).collect();
            mul[a * order + b] = index[&c];
        }
    }
    let names = perms.iter().map(|p| cycle_name(p)).collect();
    GroupTable::from_trusted(order, mul, names)
}

/// Quaternion group with elements 1, -1, i, -i, j, -j, k, -k.
pub fn quaternion8() -> GroupTable {
    // unit u ∈ {1,i,j,k} = 0..4, sign bit
    let unit_mul = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) | (x, 0) => (x, false),
            (x, y) if x == y => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let mut mul = vec![0; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (u, neg) = unit_mul(x / 2, y / 2);
            let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
            mul[x * 8 + y] = 2 * u + sign as usize;
        }
    }
    let names = ["e", "-1", "i", "-i", "j", "-j", "k", "-k"].iter().map(|s| s.to_string()).collect();
    GroupTable::from_trusted(8, mul, names)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn validated(g: &GroupTable) -> GroupTable {
        GroupTable::from_multiplication_table(g.rows(), g.names().to_vec()).unwrap()
    }

    #[test]
    fn builtins_are_groups() {
        for s in ["trivial", "cyclic:5", "dihedral:3", "dihedral:4", "symmetric:3", "symmetric:4", "q8", "product:dihedral:3,cyclic:2"] {
            let g = builtin_group(&s.parse().unwrap()).unwrap();
            assert_eq!(validated(&g), g, "{s}");
        }
    }

    #[test]
    fn dihedral_names_and_relation() {
        let d = dihedral(3);
        let names: Vec<_> = d.names().to_vec();
        assert_eq!(names, ["e", "r", "r^2", "s", "sr", "sr^2"]);
        // s r s = r⁻¹
        assert_eq!(d.mul(d.mul(3, 1), 3), 2);
        assert_eq!(d.mul(3, 1), 4);
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion8();
        assert!(!q.is_abelian());
        assert_eq!(q.element_order(2), 4);
        assert_eq!(q.mul(2, 2), 1);
        assert_eq!(q.mul(2, 4), 6);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("product:dihedral:3,dihedral:3".parse::<GroupSpec>().unwrap().order(), 36);
        assert!("symmetric:6".parse::<GroupSpec>().is_err());
        assert!("foo".parse::<GroupSpec>().is_err());
        assert!(builtin_group(&GroupSpec::Cyclic(5000)).is_err());
    }
}
