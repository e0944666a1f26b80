//! Smith normal form over a Euclidean integer type.

use num_integer::Integer;
use num_traits::Signed;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<T>>,
}

impl<T: Integer + Signed + Clone> IntMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![vec![T::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = T::one();
        }
        m
    }

    pub fn from_rows(cols: usize, data: Vec<Vec<T>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols));
        IntMatrix { rows: data.len(), cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i][j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] = out.data[i][j].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    /// Columns `range` as a new matrix.
    pub fn columns(&self, range: std::ops::Range<usize>) -> Self {
        let cols = range.len();
        let data = self.data.iter().map(|r| r[range.clone()].to_vec()).collect();
        IntMatrix { rows: self.rows, cols, data }
    }
}

/// P·A·Q = D with D diagonal, d₀ | d₁ | …, all positive.
#[derive(Clone, Debug)]
pub struct Smith<T> {
    pub diagonal: Vec<T>,
    pub left: IntMatrix<T>,
    pub left_inv: IntMatrix<T>,
    pub right: IntMatrix<T>,
}

impl<T> Smith<T> {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

struct State<T> {
    a: IntMatrix<T>,
    p: IntMatrix<T>,
    pinv: IntMatrix<T>,
    q: IntMatrix<T>,
}

impl<T: Integer + Signed + Clone> State<T> {
    // row_i += k row_j
    fn add_row(&mut self, i: usize, j: usize, k: &T) {
        if k.is_zero() {
            return;
        }
        for m in [&mut self.a, &mut self.p] {
            for c in 0..m.cols {
                let t = m.data[j][c].clone() * k.clone();
                if !t.is_zero() {
                    m.data[i][c] = m.data[i][c].clone() + t;
                }
            }
        }
        // P⁻¹ ← P⁻¹ · E⁻¹: col_j -= k col_i
        let m = &mut self.pinv;
        for r in 0..m.rows {
            let t = m.data[r][i].clone() * k.clone();
            if !t.is_zero() {
                m.data[r][j] = m.data[r][j].clone() - t;
            }
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.data.swap(i, j);
        self.p.data.swap(i, j);
        for r in self.pinv.data.iter_mut() {
            r.swap(i, j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.p] {
            for x in m.data[i].iter_mut() {
                *x = -x.clone();
            }
        }
        for r in self.pinv.data.iter_mut() {
            r[i] = -r[i].clone();
        }
    }

    // col_i += k col_j
    fn add_col(&mut self, i: usize, j: usize, k: &T) {
        if k.is_zero() {
            return;
        }
        for m in [&mut self.a, &mut self.q] {
            for r in m.data.iter_mut() {
                let t = r[j].clone() * k.clone();
                if !t.is_zero() {
                    r[i] = r[i].clone() + t;
                }
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.a, &mut self.q] {
            for r in m.data.iter_mut() {
                r.swap(i, j);
            }
        }
    }
}

/// Smith normal form with unimodular transforms.
pub fn smith_normal_form<T: Integer + Signed + Clone>(a: &IntMatrix<T>) -> Smith<T> {
    let (rows, cols) = (a.rows, a.cols);
    let mut s = State {
        a: a.clone(),
        p: IntMatrix::identity(rows),
        pinv: IntMatrix::identity(rows),
        q: IntMatrix::identity(cols),
    };
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &s.a.data[i][j];
                if !x.is_zero()
                    && best.is_none_or(|(bi, bj)| x.abs() < s.a.data[bi][bj].abs())
                {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        break;
                    }
                }
            }
            if best.is_some_and(|(bi, bj)| s.a.data[bi][bj].abs().is_one()) {
                break;
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if s.a.data[i][t].is_zero() {
                    continue;
                }
                let (qt, _) = s.a.data[i][t].div_mod_floor(&s.a.data[t][t]);
                s.add_row(i, t, &-qt);
                if !s.a.data[i][t].is_zero() {
                    s.swap_rows(t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if s.a.data[t][j].is_zero() {
                    continue;
                }
                let (qt, _) = s.a.data[t][j].div_mod_floor(&s.a.data[t][t]);
                s.add_col(j, t, &-qt);
                if !s.a.data[t][j].is_zero() {
                    s.swap_cols(t, j);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // divisibility of the remaining block
            let d = s.a.data[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s.a.data[i][j].is_multiple_of(&d)));
            match bad {
                Some(i) => s.add_row(t, i, &T::one()),
                None => break,
            }
        }
        if s.a.data[t][t].is_negative() {
            s.negate_row(t);
        }
        diagonal.push(s.a.data[t][t].clone());
        t += 1;
    }
    Smith { diagonal, left: s.p, left_inv: s.pinv, right: s.q }
}
