//! Elements of ℚ(ζ_N) with coefficients in a generic field type.
//!
//! Values are stored as a coefficient vector of length N in the basis
//! 1, ζ, …, ζ^{N-1}. Arithmetic happens in ℚ[x]/(x^N − 1), which maps onto
//! ℚ(ζ_N); the representation is reduced modulo Φ_N only when comparing or
//! serializing.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{FromPrimitive, Num};

use super::phase::Phase;
use crate::error::{Error, Result};

/// Coefficient field for cyclotomic numbers.
pub trait Coefficient:
    Clone + PartialEq + Num + Neg<Output = Self> + FromPrimitive + fmt::Debug + Send + Sync
{
}

impl<T> Coefficient for T where
    T: Clone + PartialEq + Num + Neg<Output = T> + FromPrimitive + fmt::Debug + Send + Sync
{
}

/// Coefficients of Φ_n in ascending degree.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &phi);
        }
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Euler's totient.
pub fn totient(mut n: u64) -> u64 {
    let mut r = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if n > 1 {
        r -= r / n;
    }
    r
}

#[derive(Clone, Debug)]
pub struct Cyclotomic<T> {
    order: u64,
    coeffs: Vec<T>,
}

impl<T: Coefficient> Cyclotomic<T> {
    pub fn zero(n: u64) -> Self {
        assert!(n >= 1);
        Cyclotomic {
            order: n,
            coeffs: vec![T::zero(); n as usize],
        }
    }

    pub fn from_scalar(c: T, n: u64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = c;
        z
    }

    pub fn one(n: u64) -> Self {
        Self::from_scalar(T::one(), n)
    }

    pub fn from_int(k: i64, n: u64) -> Self {
        Self::from_scalar(T::from_i64(k).expect("integer coefficient"), n)
    }

    /// ζ_n^k.
    pub fn root(k: i64, n: u64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[k.rem_euclid(n as i64) as usize] = T::one();
        z
    }

    /// The root of unity exp(2πi·p), embedded in ℚ(ζ_n).
    pub fn from_phase(p: Phase, n: u64) -> Result<Self> {
        let q = p.order();
        if !n.is_multiple_of(q) {
            return Err(Error::IncompatibleOrder { order: n, denominator: q });
        }
        Ok(Self::root(p.numer() * (n / q) as i64, n))
    }

    /// Build from an explicit coefficient vector (length at most n).
    pub fn from_coeffs(mut coeffs: Vec<T>, n: u64) -> Self {
        assert!(coeffs.len() as u64 <= n);
        coeffs.resize(n as usize, T::zero());
        Cyclotomic { order: n, coeffs }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Raw (non-canonical) coefficients.
    pub fn raw_coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Re-express in ℚ(ζ_m); `m` must be a multiple of the current order.
    pub fn embed(&self, m: u64) -> Self {
        assert!(m.is_multiple_of(self.order), "embedding into a non-multiple order");
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as usize;
        let mut z = Self::zero(m);
        for (i, c) in self.coeffs.iter().enumerate() {
            z.coeffs[i * step] = c.clone();
        }
        z
    }

    fn lift_pair(&self, other: &Self) -> (Self, Self) {
        let m = self.order.lcm(&other.order);
        (self.embed(m), other.embed(m))
    }

    /// Coefficients of the reduction modulo Φ_N, of length φ(N).
    pub fn canonical(&self) -> Vec<T> {
        let phi = cyclotomic_polynomial(self.order);
        let deg = phi.len() - 1;
        let mut c = self.coeffs.clone();
        for i in (deg..c.len()).rev() {
            if c[i].is_zero() {
                continue;
            }
            let lead = c[i].clone();
            for (j, &pj) in phi.iter().enumerate().take(deg) {
                if pj != 0 {
                    let t = lead.clone() * T::from_i64(pj).unwrap();
                    c[i - deg + j] = c[i - deg + j].clone() - t;
                }
            }
            c[i] = T::zero();
        }
        c.truncate(deg);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.order)
    }

    /// Some(q) when the value is rational.
    pub fn to_rational(&self) -> Option<T> {
        let c = self.canonical();
        if c.iter().skip(1).all(|x| x.is_zero()) {
            Some(c.first().cloned().unwrap_or_else(T::zero))
        } else {
            None
        }
    }

    /// Complex conjugation ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The automorphism ζ ↦ ζ^k, k coprime to the order.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.order as i64;
        assert!(k.gcd(&n) == 1, "Galois exponent must be coprime to the order");
        let mut z = Self::zero(self.order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let j = (i as i64 * k).rem_euclid(n) as usize;
                z.coeffs[j] = z.coeffs[j].clone() + c.clone();
            }
        }
        z
    }

    /// Multiply by ζ_N^k (a rotation of the coefficient vector).
    pub fn mul_root(&self, k: i64) -> Self {
        let n = self.order as usize;
        let s = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![T::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(i + s) % n] = c.clone();
        }
        Cyclotomic { order: self.order, coeffs }
    }

    /// Multiply by exp(2πi·p), enlarging the order if needed.
    pub fn mul_phase(&self, p: Phase) -> Self {
        let q = p.order();
        let z = if self.order.is_multiple_of(q) {
            self.clone()
        } else {
            self.embed(self.order.lcm(&q))
        };
        let k = p.numer() * (z.order / q) as i64;
        z.mul_root(k)
    }

    pub fn scale(&self, c: &T) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Decompose as `c·ζ_N^k` with rational `c`, if possible.
    pub fn as_scaled_root(&self) -> Option<(T, i64)> {
        if self.is_zero() {
            return None;
        }
        for k in 0..self.order as i64 {
            if let Some(c) = self.mul_root(-k).to_rational() {
                return Some((c, k));
            }
        }
        None
    }
}

impl<T: Coefficient + Ord> Cyclotomic<T> {
    /// Deterministic total order used to sort table rows: rational values
    /// first (descending), then the rest by canonical coefficients read from
    /// the top degree down, descending.
    pub fn display_cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.lift_pair(other);
        let ca = a.canonical();
        let cb = b.canonical();
        let ra = ca.iter().skip(1).all(|x| x.is_zero());
        let rb = cb.iter().skip(1).all(|x| x.is_zero());
        match (ra, rb) {
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        for i in (0..ca.len()).rev() {
            match cb[i].cmp(&ca[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl<T: Coefficient> PartialEq for Cyclotomic<T> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.lift_pair(other);
        (&a - &b).is_zero()
    }
}

impl<T: Coefficient> Add for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn add(self, other: &Cyclotomic<T>) -> Cyclotomic<T> {
        if self.order == other.order {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| x.clone() + y.clone())
                .collect();
            return Cyclotomic { order: self.order, coeffs };
        }
        let (a, b) = self.lift_pair(other);
        &a + &b
    }
}

impl<T: Coefficient> Sub for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn sub(self, other: &Cyclotomic<T>) -> Cyclotomic<T> {
        self + &(-other)
    }
}

impl<T: Coefficient> Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| -x.clone()).collect(),
        }
    }
}

impl<T: Coefficient> Mul for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn mul(self, other: &Cyclotomic<T>) -> Cyclotomic<T> {
        if self.order != other.order {
            let (a, b) = self.lift_pair(other);
            return &a * &b;
        }
        let n = self.order as usize;
        let mut out = vec![T::zero(); n];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i + j) % n;
                out[k] = out[k].clone() + x.clone() * y.clone();
            }
        }
        Cyclotomic { order: self.order, coeffs: out }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Coefficient> $tr for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $m(self, other: Cyclotomic<T>) -> Cyclotomic<T> {
                (&self).$m(&other)
            }
        }
        impl<T: Coefficient> $tr<&Cyclotomic<T>> for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $m(self, other: &Cyclotomic<T>) -> Cyclotomic<T> {
                (&self).$m(other)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<T: Coefficient> Neg for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        -&self
    }
}

impl<T: Coefficient + fmt::Display> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        let mut first = true;
        for (i, x) in c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{x}")?,
                _ if x.is_one() => write!(f, "z{}^{}", self.order, i)?,
                _ => write!(f, "({x})*z{}^{}", self.order, i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type C = Cyclotomic<BigRational>;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(105).len() - 1, totient(105) as usize);
    }

    #[test]
    fn minimal_polynomial_relation() {
        let s = &C::root(1, 3) + &C::root(2, 3);
        assert_eq!(s, C::from_int(-1, 1));
    }

    #[test]
    fn conj_and_phase() {
        assert_eq!(C::root(1, 9).conj(), C::root(8, 9));
        let m = C::from_phase(Phase::new(1, 2), 6).unwrap();
        assert_eq!(m, C::root(3, 6));
        assert_eq!(m, C::from_int(-1, 6));
        assert!(C::from_phase(Phase::new(1, 4), 6).is_err());
    }

    #[test]
    fn mixed_orders() {
        let i = C::root(1, 4);
        let w = C::root(1, 3);
        let p = &i * &w;
        assert_eq!(p.order(), 12);
        assert_eq!(p, C::root(7, 12));
        assert_eq!(&i * &i, C::from_int(-1, 1));
    }

    #[test]
    fn ordering_puts_one_before_omega() {
        let one = C::one(6);
        let w = C::root(1, 3);
        let w2 = C::root(2, 3);
        assert_eq!(one.display_cmp(&w), Ordering::Less);
        assert_eq!(w.display_cmp(&w2), Ordering::Less);
        assert_eq!(C::from_int(1, 1).display_cmp(&C::from_int(-1, 1)), Ordering::Less);
    }
}
