//! The classification engine: image of the Boechat-Haefliger invariant,
//! Kreck-invariant fibers, the Z_12 connected-sum action and the
//! connected-sum counting law.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::HomClass;
use crate::manifold4::FourManifold;

/// A value of the Boechat-Haefliger invariant on a fixed manifold:
/// a characteristic class u with u.u = signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BHClass {
    pub u: HomClass,
}

/// An isotopy class: a BH value together with a Kreck residue eta modulo
/// m = GCD(d(u), 24), where GCD(0, 24) = 24. When m is even only even
/// residues occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingClass {
    pub u: HomClass,
    pub eta: u64,
    pub modulus: u64,
}

/// The eta modulus m = GCD(d, 24); the GCD(0, 24) = 24 convention is the
/// "maximal integer k dividing both u and 24" reading with d(0) = 0.
pub fn eta_modulus(d: &BigInt) -> u64 {
    d.gcd(&BigInt::from(24u8)).to_u64().expect("gcd with 24 fits")
}

/// Number of isotopy classes over one BH value, as a function of the
/// divisibility d of u: the count of even residues in Z_m, m = GCD(d, 24).
/// Equivalently GCD(d/2, 12) for d even and GCD(d, 3) for d odd.
pub fn fiber_count_for_divisibility(d: &BigInt) -> u64 {
    let m = eta_modulus(d);
    if m % 2 == 0 {
        m / 2
    } else {
        m
    }
}

/// The even subgroup of Z_m (all of Z_m when m is odd), ascending.
pub fn even_residues(m: u64) -> Vec<u64> {
    if m % 2 == 0 {
        (0..m).step_by(2).collect()
    } else {
        (0..m).collect()
    }
}

/// Validate u as a BH value on N: characteristic and of square sigma(N).
pub fn bh_class(manifold: &FourManifold, u: HomClass) -> Result<BHClass> {
    let form = manifold.form();
    if !form.is_characteristic(&u)? {
        return Err(Error::NotBhClass(format!("{u} is not characteristic")));
    }
    let square = form.evaluate(&u, &u)?;
    let sigma = BigInt::from(manifold.signature());
    if square != sigma {
        return Err(Error::NotBhClass(format!(
            "{u} has square {square}, signature is {sigma}"
        )));
    }
    Ok(BHClass { u })
}

/// Enumeration of the BH image within a coordinate box.
#[derive(Debug, Clone)]
pub struct BhImage {
    pub classes: Vec<BHClass>,
    pub bound: u32,
    /// Set when the form is indefinite: the true image is infinite and the
    /// enumeration only covers the box.
    pub truncated: bool,
}

/// All BH values with max |coordinate| <= bound, in deterministic
/// lexicographic order.
pub fn bh_image(manifold: &FourManifold, bound: u32) -> BhImage {
    let form = manifold.form();
    let sigma = BigInt::from(manifold.signature());
    let classes = form
        .enumerate_characteristic_with_square(&sigma, bound)
        .into_iter()
        .map(|u| BHClass { u })
        .collect();
    let indefinite =
        form.rank() > 0 && (manifold.signature().unsigned_abs() as usize) < form.rank();
    BhImage { classes, bound, truncated: indefinite }
}

pub fn fiber_count(_manifold: &FourManifold, class: &BHClass) -> u64 {
    fiber_count_for_divisibility(&class.u.divisibility())
}

/// All isotopy classes over one BH value: the even residues of Z_m,
/// with the base-point embedding at residue 0.
pub fn enumerate_fiber(_manifold: &FourManifold, class: &BHClass) -> Vec<EmbeddingClass> {
    let m = eta_modulus(&class.u.divisibility());
    even_residues(m)
        .into_iter()
        .map(|eta| EmbeddingClass { u: class.u.clone(), eta, modulus: m })
        .collect()
}

/// Connected sum with k times the generator of E^7(S^4) = Z_12: BH is
/// unchanged and eta shifts by 2k (the generator has eta_0 = 2).
pub fn act(e: &EmbeddingClass, k: u64) -> EmbeddingClass {
    EmbeddingClass {
        u: e.u.clone(),
        eta: (e.eta + 2 * (k % 12)) % e.modulus,
        modulus: e.modulus,
    }
}

/// Number of isotopy classes over a_1 + a_2 on N_1 # N_2, from the
/// divisibilities d_i of the a_i: GCD(d_1, d_2, 3) if either is odd,
/// GCD(d_1/2, d_2/2, 12) if both are even (0 counts as even).
pub fn connected_sum_fiber_count(d1: u64, d2: u64) -> u64 {
    if d1 % 2 == 1 || d2 % 2 == 1 {
        d1.gcd(&d2).gcd(&3)
    } else {
        (d1 / 2).gcd(&(d2 / 2)).gcd(&12)
    }
}
