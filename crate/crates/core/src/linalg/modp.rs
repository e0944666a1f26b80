//! Linear algebra over a prime field GF(p), p < 2³¹.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero");
    pow_mod(a, p - 2, p)
}

/// Least generator of GF(p)^×.
pub fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("primitive root exists")
}

/// Dense matrix over GF(p), row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    pub n: usize,
    pub m: usize,
    pub p: u64,
    pub data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(n: usize, m: usize, p: u64) -> Self {
        ModMatrix { n, m, p, data: vec![0; n * m] }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.m + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.m + j] = v % self.p;
    }

    pub fn mul(&self, o: &ModMatrix) -> ModMatrix {
        assert_eq!(self.m, o.n);
        let p = self.p;
        let mut r = ModMatrix::zeros(self.n, o.m, p);
        for i in 0..self.n {
            for k in 0..self.m {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..o.m {
                    let idx = i * o.m + j;
                    r.data[idx] = (r.data[idx] + a * o.at(k, j)) % p;
                }
            }
        }
        r
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.m {
            if r == self.n {
                break;
            }
            let Some(pr) = (r..self.n).find(|&i| self.at(i, c) != 0) else { continue };
            if pr != r {
                for j in 0..self.m {
                    self.data.swap(pr * self.m + j, r * self.m + j);
                }
            }
            let inv = inv_mod(self.at(r, c), p);
            for j in 0..self.m {
                let v = self.at(r, j) * inv % p;
                self.data[r * self.m + j] = v;
            }
            for i in 0..self.n {
                if i == r {
                    continue;
                }
                let f = self.at(i, c);
                if f == 0 {
                    continue;
                }
                for j in 0..self.m {
                    let v = (self.at(i, j) + p - f * self.at(r, j) % p) % p;
                    self.data[i * self.m + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Basis of the right null space, as column vectors.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let mut a = self.clone();
        let pivots = a.rref();
        let p = self.p;
        let mut basis = Vec::new();
        for free in (0..self.m).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; self.m];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a.at(i, free)) % p;
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial det(xI − A), ascending coefficients.
    pub fn charpoly(&self) -> Vec<u64> {
        assert_eq!(self.n, self.m);
        let n = self.n;
        let p = self.p;
        let mut h = self.clone();
        // reduce to upper Hessenberg form by similarity
        for c in 0..n.saturating_sub(2) {
            let Some(piv) = (c + 1..n).find(|&i| h.at(i, c) != 0) else { continue };
            if piv != c + 1 {
                for j in 0..n {
                    h.data.swap(piv * n + j, (c + 1) * n + j);
                }
                for i in 0..n {
                    h.data.swap(i * n + piv, i * n + c + 1);
                }
            }
            let inv = inv_mod(h.at(c + 1, c), p);
            for i in c + 2..n {
                let f = h.at(i, c) * inv % p;
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = (h.at(i, j) + p - f * h.at(c + 1, j) % p) % p;
                    h.data[i * n + j] = v;
                }
                for r in 0..n {
                    let v = (h.at(r, c + 1) + f * h.at(r, i)) % p;
                    h.data[r * n + c + 1] = v;
                }
            }
        }
        // recurrence for the leading principal minors
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let mut next = vec![0u64; k + 2];
            // (x - h_kk) * p_k
            for (i, &c) in polys[k].iter().enumerate() {
                next[i + 1] = (next[i + 1] + c) % p;
                next[i] = (next[i] + p - c * h.at(k, k) % p) % p;
            }
            let mut prod = 1u64;
            for i in (0..k).rev() {
                prod = prod * h.at(i + 1, i) % p;
                if prod == 0 {
                    break;
                }
                let t = prod * h.at(i, k) % p;
                for (j, &c) in polys[i].iter().enumerate() {
                    next[j] = (next[j] + p - t * c % p) % p;
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }
}

pub fn eval_poly(c: &[u64], x: u64, p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &a| (acc * x + a) % p)
}

/// All roots in GF(p) with multiplicity ignored.
pub fn roots(c: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| eval_poly(c, x, p) == 0).collect()
}
