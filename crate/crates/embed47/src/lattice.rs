//! Unimodular symmetric bilinear forms and their characteristic vectors.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlinalg::{self, IntMatrix};

/// A symmetric integer form with |det| = 1. Rank 0 is allowed (det = 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularForm {
    matrix: IntMatrix,
}

/// A homology class written as a coordinate vector in the fixed basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomClass(pub Vec<BigInt>);

impl HomClass {
    pub fn from_i64(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![BigInt::zero(); rank])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn divisibility(&self) -> BigInt {
        exactlinalg::divisibility(&self.0)
    }
}

impl std::fmt::Display for HomClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl UnimodularForm {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if let Some((i, j)) = matrix.asymmetry_witness() {
            return Err(Error::NotSymmetric { i, j });
        }
        if !matrix.is_square() {
            return Err(Error::BadDimensions("form matrix not square".into()));
        }
        let det = matrix.det()?;
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
        Ok(Self { matrix })
    }

    pub fn rank_zero() -> Self {
        Self { matrix: IntMatrix::zero(0, 0) }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    /// Hyperbolic plane H+.
    pub fn hyperbolic() -> Self {
        Self { matrix: exactlinalg::hyperbolic_matrix() }
    }

    /// Rank-one form <s> with s = +-1.
    pub fn diag_one(sign: i64) -> Self {
        Self::from_rows(&[vec![sign]]).expect("<+-1> is unimodular")
    }

    /// The E8 form (even, signature 8) or its negative.
    pub fn e8(sign: i64) -> Self {
        let e8 = exactlinalg::e8_matrix();
        let mut rows = e8.row_slices();
        if sign < 0 {
            for r in rows.iter_mut() {
                for x in r.iter_mut() {
                    *x = -x.clone();
                }
            }
        }
        let entries = rows.into_iter().flatten().collect();
        Self { matrix: IntMatrix::new(8, 8, entries).unwrap() }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn signature(&self) -> i64 {
        if self.rank() == 0 {
            return 0;
        }
        // unimodular forms are nondegenerate
        exactlinalg::signature(&self.matrix).expect("unimodular form is nondegenerate")
    }

    fn check_rank(&self, u: &HomClass) -> Result<()> {
        if u.len() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: u.len() });
        }
        Ok(())
    }

    /// u^T G v.
    pub fn evaluate(&self, u: &HomClass, v: &HomClass) -> Result<BigInt> {
        self.check_rank(u)?;
        self.check_rank(v)?;
        let gv = self.matrix.mul_vec(&v.0)?;
        Ok(u.0.iter().zip(gv.iter()).map(|(a, b)| a * b).sum())
    }

    /// True iff (G u)_i = G_ii mod 2 for all i, i.e. u.x = x.x mod 2 on a basis.
    pub fn is_characteristic(&self, u: &HomClass) -> Result<bool> {
        self.check_rank(u)?;
        let gu = self.matrix.mul_vec(&u.0)?;
        Ok((0..self.rank()).all(|i| ((&gu[i] - self.matrix.at(i, i)) % 2u8).is_zero()))
    }

    /// True iff every diagonal entry is even (0 is characteristic).
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| (self.matrix.at(i, i) % 2u8).is_zero())
    }

    /// All characteristic u with u.u = target and max |coordinate| <= bound,
    /// in lexicographic order of the coordinate vector.
    pub fn enumerate_characteristic_with_square(
        &self,
        target: &BigInt,
        bound: u32,
    ) -> Vec<HomClass> {
        let n = self.rank();
        if n == 0 {
            return if target.is_zero() { vec![HomClass::zero(0)] } else { vec![] };
        }
        let mut out = Vec::new();
        let lo = -i64::from(bound);
        let hi = i64::from(bound);
        let mut coords = vec![lo; n];
        loop {
            let u = HomClass(coords.iter().map(|&c| BigInt::from(c)).collect());
            if self.is_characteristic(&u).unwrap() && &self.evaluate(&u, &u).unwrap() == target {
                out.push(u);
            }
            // odometer, last coordinate fastest
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if coords[i] < hi {
                    coords[i] += 1;
                    break;
                }
                coords[i] = lo;
            }
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self { matrix: self.matrix.direct_sum(&other.matrix) }
    }
}
