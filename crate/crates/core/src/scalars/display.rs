//! Human-readable rendering of cyclotomic numbers using the root names of
//! the D₃ tables: ω (order 3), ε (order 4), η (order 9), ζₙ otherwise.

use std::fmt::Display;

use num_integer::Integer;
use num_traits::Signed;

use super::cyclotomic::{totient, Coefficient, Cyclotomic};

const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn digits(n: u64, table: &[char; 10]) -> String {
    n.to_string()
        .chars()
        .map(|c| table[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// Name of the primitive `o`-th root raised to `j` (gcd(j, o) = 1).
pub fn root_name(o: u64, j: u64, ascii: bool) -> String {
    if o == 1 {
        return "1".into();
    }
    let inverse = o == 3 && j == 2;
    if ascii {
        let base = format!("z{o}");
        return match (inverse, j) {
            (true, _) => format!("{base}^-1"),
            (_, 1) => base,
            _ => format!("{base}^{j}"),
        };
    }
    let base = match o {
        3 => "ω".to_string(),
        4 => "ε".to_string(),
        9 => "η".to_string(),
        _ => format!("ζ{}", digits(o, &SUB)),
    };
    match (inverse, j) {
        (true, _) => format!("{base}⁻¹"),
        (_, 1) => base,
        _ => format!("{base}{}", digits(j, &SUP)),
    }
}

fn reduced(k: i64, n: u64) -> (u64, u64) {
    let k = k.rem_euclid(n as i64) as u64;
    if k == 0 {
        return (1, 0);
    }
    let g = k.gcd(&n);
    (n / g, k / g)
}

fn exp_preference(o: u64, j: u64) -> u64 {
    if j == 1 || (o == 3 && j == 2) {
        0
    } else {
        j
    }
}

fn coefficient_prefix<T: Coefficient + Display + Signed>(c: &T, leading: bool) -> (String, bool) {
    // returns (sign-and-magnitude text, magnitude_is_one)
    let neg = c.is_negative();
    let mag = c.abs();
    let sign = match (neg, leading) {
        (true, true) => "-",
        (true, false) => " - ",
        (false, true) => "",
        (false, false) => " + ",
    };
    if mag.is_one() {
        (sign.to_string(), true)
    } else if mag.to_string().contains('/') {
        (format!("{sign}({mag})"), false)
    } else {
        (format!("{sign}{mag}"), false)
    }
}

fn term<T: Coefficient + Display + Signed>(c: &T, k: i64, n: u64, leading: bool, ascii: bool) -> String {
    let (o, j) = reduced(k, n);
    let (prefix, unit) = coefficient_prefix(c, leading);
    match (o, unit) {
        (1, true) => format!("{prefix}1"),
        (1, false) => prefix,
        _ => format!("{prefix}{}", root_name(o, j, ascii)),
    }
}

/// Render a cyclotomic number.
pub fn pretty<T: Coefficient + Display + Signed>(z: &Cyclotomic<T>, ascii: bool) -> String {
    if let Some(q) = z.to_rational() {
        return q.to_string();
    }
    let n = z.order();
    let mut best: Option<(T, i64, (u64, u64))> = None;
    for k in 0..n as i64 {
        if let Some(c) = z.mul_root(-k).to_rational() {
            let (o, j) = reduced(k, n);
            let key = (o, exp_preference(o, j));
            if best.as_ref().is_none_or(|b| key < b.2) {
                best = Some((c, k, key));
            }
        }
    }
    if let Some((c, k, _)) = best {
        return term(&c, k, n, true, ascii);
    }
    let m = conductor(z);
    let coeffs = coefficients_at(z, m).expect("value lies in its conductor field");
    let mut out = String::new();
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out.push_str(&term(c, j as i64, m, out.is_empty(), ascii));
    }
    out
}

/// Least m | N such that the value lies in ℚ(ζ_m).
pub fn conductor<T: Coefficient>(z: &Cyclotomic<T>) -> u64 {
    let n = z.order();
    for m in 1..=n {
        if !n.is_multiple_of(m) {
            continue;
        }
        let fixed = (1..n as i64)
            .filter(|k| k.gcd(&(n as i64)) == 1 && (k - 1) % m as i64 == 0)
            .all(|k| z.galois(k) == *z);
        if fixed {
            return m;
        }
    }
    n
}

/// Coordinates of the value in the power basis 1, ζ_m, …, ζ_m^{φ(m)-1}.
pub fn coefficients_at<T: Coefficient>(z: &Cyclotomic<T>, m: u64) -> Option<Vec<T>> {
    let n = z.order();
    if !n.is_multiple_of(m) {
        return None;
    }
    let d = totient(m) as usize;
    let cols: Vec<Vec<T>> = (0..d)
        .map(|j| Cyclotomic::<T>::root((j as u64 * (n / m)) as i64, n).canonical())
        .collect();
    let rhs = z.canonical();
    let rows = rhs.len();
    // augmented matrix rows × (d + 1)
    let mut a: Vec<Vec<T>> = (0..rows)
        .map(|i| {
            let mut r: Vec<T> = cols.iter().map(|c| c[i].clone()).collect();
            r.push(rhs[i].clone());
            r
        })
        .collect();
    let mut piv = Vec::new();
    let mut r = 0;
    for c in 0..d {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = T::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..=d {
                    let t = a[r][k].clone() * f.clone();
                    a[i][k] = a[i][k].clone() - t;
                }
            }
        }
        piv.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[d].is_zero()) {
        return None;
    }
    let mut out = vec![T::zero(); d];
    for (i, &c) in piv.iter().enumerate() {
        out[c] = a[i][d].clone();
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    type C = Cyclotomic<BigRational>;

    #[test]
    fn names() {
        assert_eq!(pretty(&C::root(1, 3).embed(36), false), "ω");
        assert_eq!(pretty(&C::root(2, 3), false), "ω⁻¹");
        assert_eq!(pretty(&C::root(3, 4), false), "-ε");
        assert_eq!(pretty(&C::root(5, 9).embed(18), false), "η⁵");
        assert_eq!(pretty(&C::root(1, 6), false), "-ω⁻¹");
        assert_eq!(pretty(&C::from_int(2, 6), false), "2");
        assert_eq!(pretty(&C::root(2, 3), true), "z3^-1");
        let s = &C::one(3) + &C::root(2, 3);
        assert_eq!(pretty(&s, false), "-ω");
    }

    #[test]
    fn sums() {
        let z = &C::root(1, 4) + &C::root(1, 3);
        let m = conductor(&z);
        assert_eq!(m, 12);
        let c = coefficients_at(&z, 12).unwrap();
        let back = c.iter().enumerate().fold(C::zero(12), |acc, (j, x)| {
            &acc + &C::root(j as i64, 12).scale(x)
        });
        assert_eq!(back, z);
        assert!(!pretty(&z, false).is_empty());
    }
}
