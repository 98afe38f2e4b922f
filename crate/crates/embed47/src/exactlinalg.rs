//! Exact arbitrary-precision integer matrix algebra.
//!
//! Everything downstream (form evaluation, Smith reduction, signatures,
//! unimodular inverses) runs over `BigInt` or exact rationals; no floating
//! point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::BadDimensions(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(data: &[Vec<i64>]) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        for r in data {
            if r.len() != cols {
                return Err(Error::BadDimensions("ragged rows".into()));
            }
        }
        let entries = data
            .iter()
            .flat_map(|r| r.iter().map(|&x| BigInt::from(x)))
            .collect();
        Self::new(rows, cols, entries)
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.at(i, j) != self.at(j, i) {
                    return false;
                }
            }
        }
        self.is_square()
    }

    /// First index (i,j) where symmetry fails, for diagnostics.
    pub fn asymmetry_witness(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in (i + 1)..self.cols.min(self.rows) {
                if self.at(i, j) != self.at(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::BadDimensions(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    *out.at_mut(i, j) += a * other.at(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::RankMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = vec![BigInt::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[i] += self.at(i, j) * &v[j];
            }
        }
        Ok(out)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(i, j) = self.at(i, j).clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                *out.at_mut(self.rows + i, self.cols + j) = other.at(i, j).clone();
            }
        }
        out
    }

    pub fn row_slices(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).clone()).collect())
            .collect()
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::BadDimensions("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.at(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                    *m.at_mut(i, j) = &t / &prev;
                }
                *m.at_mut(i, k) = BigInt::zero();
            }
            prev = m.at(k, k).clone();
        }
        let d = m.at(n - 1, n - 1).clone();
        Ok(if sign < 0 { -d } else { d })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let c = self.cols;
            self.entries.swap(a * c + j, b * c + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let c = self.cols;
            self.entries.swap(i * c + a, i * c + b);
        }
    }

    /// row a += q * row b
    fn add_row_mul(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let t = self.at(b, j) * q;
            *self.at_mut(a, j) += t;
        }
    }

    /// col a += q * col b
    fn add_col_mul(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let t = self.at(i, b) * q;
            *self.at_mut(i, a) += t;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let t = -self.at(a, j).clone();
            *self.at_mut(a, j) = t;
        }
    }
}

/// Decomposition U*A*V = D with U, V unimodular and D diagonal,
/// d_i >= 0 and d_i | d_{i+1}.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

/// Smith normal form by elementary row/column reduction with
/// smallest-nonzero-pivot selection.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero |entry| in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if d.at(i, j).is_zero() {
                    continue;
                }
                match pivot {
                    Some((pi, pj)) if d.at(pi, pj).abs() <= d.at(i, j).abs() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        'reduce: loop {
            for i in t + 1..rows {
                if !d.at(i, t).is_zero() {
                    let q = -(d.at(i, t) / d.at(t, t));
                    d.add_row_mul(i, t, &q);
                    u.add_row_mul(i, t, &q);
                    if !d.at(i, t).is_zero() {
                        // remainder smaller than the pivot; promote it
                        d.swap_rows(t, i);
                        u.swap_rows(t, i);
                        continue 'reduce;
                    }
                }
            }
            for j in t + 1..cols {
                if !d.at(t, j).is_zero() {
                    let q = -(d.at(t, j) / d.at(t, t));
                    d.add_col_mul(j, t, &q);
                    v.add_col_mul(j, t, &q);
                    if !d.at(t, j).is_zero() {
                        d.swap_cols(t, j);
                        v.swap_cols(t, j);
                        continue 'reduce;
                    }
                }
            }
            // pivot must divide the whole trailing block
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(d.at(i, j) % d.at(t, t)).is_zero() {
                        d.add_row_mul(t, i, &BigInt::one());
                        u.add_row_mul(t, i, &BigInt::one());
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        t += 1;
    }

    for i in 0..rows.min(cols) {
        if d.at(i, i).is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
    }
    SmithForm { u, d, v }
}

/// Divisibility d(u): gcd of the entries, with d(0) = 0.
pub fn divisibility(u: &[BigInt]) -> BigInt {
    u.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Signature of a symmetric nondegenerate integer matrix, by exact rational
/// symmetric elimination. A zero diagonal pivot with a nonzero off-diagonal
/// partner is handled by the 2x2 hyperbolic-block step (contributes +1, -1).
pub fn signature(g: &IntMatrix) -> Result<i64> {
    if let Some((i, j)) = g.asymmetry_witness() {
        return Err(Error::NotSymmetric { i, j });
    }
    if !g.is_square() {
        return Err(Error::BadDimensions("signature of non-square matrix".into()));
    }
    let n = g.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(g.at(i, j).clone()))
                .collect()
        })
        .collect();

    let mut pos = 0i64;
    let mut neg = 0i64;
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                swap_sym(&mut a, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // whole trailing diagonal is zero: hyperbolic block on (k, k+1)
                swap_sym(&mut a, k + 1, j);
                hyperbolic_eliminate(&mut a, k);
                pos += 1;
                neg += 1;
                k += 2;
                continue;
            } else {
                return Err(Error::Degenerate);
            }
        }
        let pivot = a[k][k].clone();
        if pivot > BigRational::zero() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
        // mirror the row elimination on columns; entries above are dead
        for j in k + 1..n {
            a[k][j] = BigRational::zero();
        }
        for i in k + 1..n {
            a[i][k] = BigRational::zero();
        }
        k += 1;
    }
    Ok(pos - neg)
}

fn swap_sym(a: &mut [Vec<BigRational>], x: usize, y: usize) {
    if x == y {
        return;
    }
    a.swap(x, y);
    for row in a.iter_mut() {
        row.swap(x, y);
    }
}

/// Eliminate rows/cols > k+1 against the block [[0,b],[b,d]] at (k,k+1),
/// b != 0, using congruence operations.
fn hyperbolic_eliminate(a: &mut [Vec<BigRational>], k: usize) {
    let n = a.len();
    let b = a[k][k + 1].clone();
    let d = a[k + 1][k + 1].clone();
    for i in k + 2..n {
        // choose (alpha, beta) so that row_i - alpha*row_k - beta*row_{k+1}
        // has zeros in columns k and k+1
        let beta = &a[i][k] / &b;
        let alpha = (&a[i][k + 1] - &beta * &d) / &b;
        if alpha.is_zero() && beta.is_zero() {
            continue;
        }
        for j in 0..n {
            let t = &alpha * &a[k][j] + &beta * &a[k + 1][j];
            a[i][j] -= t;
        }
        for r in 0..n {
            let t = &alpha * &a[r][k] + &beta * &a[r][k + 1];
            a[r][i] -= t;
        }
    }
}

/// Integer inverse of a unimodular matrix, via the Smith decomposition:
/// when U*G*V = I the inverse is V*U. Verified by multiplication.
pub fn invert_unimodular(g: &IntMatrix) -> Result<IntMatrix> {
    if !g.is_square() {
        return Err(Error::BadDimensions("inverse of non-square matrix".into()));
    }
    let n = g.rows();
    let snf = smith_normal_form(g);
    for i in 0..n {
        if !snf.d.at(i, i).is_one() {
            let det = g.det()?;
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
    }
    let inv = snf.v.mul(&snf.u)?;
    debug_assert_eq!(g.mul(&inv)?, IntMatrix::identity(n));
    Ok(inv)
}

/// Standard E8 Cartan matrix: even, unimodular, signature 8.
pub fn e8_matrix() -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![2, -1, 0, 0, 0, 0, 0, 0],
        vec![-1, 2, -1, 0, 0, 0, 0, 0],
        vec![0, -1, 2, -1, 0, 0, 0, 0],
        vec![0, 0, -1, 2, -1, 0, 0, 0],
        vec![0, 0, 0, -1, 2, -1, 0, -1],
        vec![0, 0, 0, 0, -1, 2, -1, 0],
        vec![0, 0, 0, 0, 0, -1, 2, 0],
        vec![0, 0, 0, 0, -1, 0, 0, 2],
    ])
    .unwrap()
}

/// Hyperbolic plane [[0,1],[1,0]].
pub fn hyperbolic_matrix() -> IntMatrix {
    IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap()
}
