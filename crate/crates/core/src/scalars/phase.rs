//! Elements of ℚ/ℤ.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A reduced fraction `num/den` with `0 <= num < den`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Phase {
    num: i64,
    den: i64,
}

impl Phase {
    pub const ZERO: Phase = Phase { num: 0, den: 1 };

    pub fn new(num: i64, den: i64) -> Phase {
        Phase::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Phase {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let num = num.rem_euclid(den);
        let g = num.gcd(&den);
        Phase {
            num: (num / g) as i64,
            den: (den / g) as i64,
        }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Additive order, i.e. the denominator.
    pub fn order(&self) -> u64 {
        self.den as u64
    }

    pub fn scale(self, k: i64) -> Phase {
        let k = (k as i128).rem_euclid(self.den as i128);
        Phase::from_i128(self.num as i128 * k, self.den as i128)
    }

    pub fn scale_big(self, k: &BigInt) -> Phase {
        let r = k.mod_floor(&BigInt::from(self.den));
        self.scale(r.to_i64().expect("reduced below denominator"))
    }

    /// One solution `x` of `d·x = self`.
    pub fn div_int(self, d: i64) -> Phase {
        assert!(d != 0, "division by zero");
        Phase::from_i128(self.num as i128, self.den as i128 * d as i128)
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, o: Phase) -> Phase {
        let l = self.den.lcm(&o.den) as i128;
        let a = self.num as i128 * (l / self.den as i128);
        let b = o.num as i128 * (l / o.den as i128);
        Phase::from_i128(a + b, l)
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, o: Phase) -> Phase {
        self + (-o)
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        if self.num == 0 {
            self
        } else {
            Phase {
                num: self.den - self.num,
                den: self.den,
            }
        }
    }
}

impl AddAssign for Phase {
    fn add_assign(&mut self, o: Phase) {
        *self = *self + o;
    }
}

impl SubAssign for Phase {
    fn sub_assign(&mut self, o: Phase) {
        *self = *self - o;
    }
}

impl Sum for Phase {
    fn sum<I: Iterator<Item = Phase>>(iter: I) -> Phase {
        iter.fold(Phase::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Phase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Phase, Error> {
        let bad = || Error::Parse(format!("bad phase '{s}'"));
        let s = s.trim();
        match s.split_once('/') {
            Some((a, b)) => {
                let a: i64 = a.trim().parse().map_err(|_| bad())?;
                let b: i64 = b.trim().parse().map_err(|_| bad())?;
                if b == 0 {
                    return Err(bad());
                }
                Ok(Phase::new(a, b))
            }
            None => {
                let a: i64 = s.parse().map_err(|_| bad())?;
                Ok(Phase::new(a, 1))
            }
        }
    }
}

impl Serialize for Phase {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Phase {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Phase, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Least N such that every phase embeds into the N-th roots of unity and
/// every listed exponent divides N.
pub fn common_root_order<'a>(
    phases: impl IntoIterator<Item = &'a Phase>,
    exponents: impl IntoIterator<Item = u64>,
) -> u64 {
    let mut n = 1u64;
    for p in phases {
        n = n.lcm(&p.order());
    }
    for e in exponents {
        n = n.lcm(&e.max(1));
    }
    n
}
