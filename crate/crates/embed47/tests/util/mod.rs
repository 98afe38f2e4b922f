//! Shared helpers for the integration suites: seeded random matrices,
//! unimodular basis changes and seed-block forms.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use embed47::exactlinalg::{self, IntMatrix};
use embed47::lattice::UnimodularForm;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, amp: i64) -> IntMatrix {
    let rows_data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-amp..=amp)).collect())
        .collect();
    IntMatrix::from_rows(&rows_data).unwrap()
}

/// Random unimodular matrix built from elementary moves, together with its
/// inverse (tracked by applying the inverse moves on the right).
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize, moves: usize) -> (IntMatrix, IntMatrix) {
    let mut m = vec![vec![0i64; n]; n];
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 1;
        inv[i][i] = 1;
    }
    if n < 2 {
        return (
            IntMatrix::from_rows(&m).unwrap(),
            IntMatrix::from_rows(&inv).unwrap(),
        );
    }
    for _ in 0..moves {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        match rng.gen_range(0..3) {
            0 => {
                // row i += c * row j  /  inverse: row i -= c * row j
                let c = rng.gen_range(-2..=2i64);
                for k in 0..n {
                    m[i][k] += c * m[j][k];
                }
                for k in 0..n {
                    let t = c * inv[k][i];
                    inv[k][j] -= t;
                }
            }
            1 => {
                m.swap(i, j);
                for row in inv.iter_mut() {
                    row.swap(i, j);
                }
            }
            _ => {
                for k in 0..n {
                    m[i][k] = -m[i][k];
                }
                for row in inv.iter_mut() {
                    row[i] = -row[i];
                }
            }
        }
    }
    (
        IntMatrix::from_rows(&m).unwrap(),
        IntMatrix::from_rows(&inv).unwrap(),
    )
}

/// A random direct sum of seed blocks <1>, <-1>, H+, +-E8, together with a
/// characteristic vector of the summed form (in the block basis).
pub fn random_seed_form(
    rng: &mut ChaCha8Rng,
    allow_e8: bool,
) -> (UnimodularForm, Vec<BigInt>) {
    let mut form = UnimodularForm::rank_zero();
    let mut chr: Vec<BigInt> = Vec::new();
    let blocks = rng.gen_range(1..=3usize);
    for _ in 0..blocks {
        let choice = rng.gen_range(0..if allow_e8 { 5 } else { 3 });
        match choice {
            0 => {
                form = form.direct_sum(&UnimodularForm::diag_one(1));
                chr.push(BigInt::from(1));
            }
            1 => {
                form = form.direct_sum(&UnimodularForm::diag_one(-1));
                chr.push(BigInt::from(1));
            }
            2 => {
                form = form.direct_sum(&UnimodularForm::hyperbolic());
                chr.extend([BigInt::from(0), BigInt::from(0)]);
            }
            3 => {
                form = form.direct_sum(&UnimodularForm::e8(1));
                chr.extend(std::iter::repeat(BigInt::from(0)).take(8));
            }
            _ => {
                form = form.direct_sum(&UnimodularForm::e8(-1));
                chr.extend(std::iter::repeat(BigInt::from(0)).take(8));
            }
        }
    }
    (form, chr)
}

/// Congruent form M^T G M for a random unimodular M; returns the new form,
/// and maps the given vector u to the new basis (u' = M^-1 u).
pub fn conjugate(
    rng: &mut ChaCha8Rng,
    form: &UnimodularForm,
    u: &[BigInt],
) -> (UnimodularForm, Vec<BigInt>) {
    let n = form.rank();
    let (m, m_inv) = random_unimodular(rng, n, 2 * n + 4);
    debug_assert_eq!(m.mul(&m_inv).unwrap(), IntMatrix::identity(n));
    let g2 = m.transpose().mul(form.matrix()).unwrap().mul(&m).unwrap();
    let u2 = m_inv.mul_vec(u).unwrap();
    (UnimodularForm::new(g2).unwrap(), u2)
}

#[allow(dead_code)]
pub fn signature_of(m: &IntMatrix) -> i64 {
    exactlinalg::signature(m).unwrap()
}
