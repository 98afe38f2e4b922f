//! Handle calculus for 8-manifolds built from framed links of 3-spheres,
//! the Eells-Kuiper class of the boundary, the Kreck obstruction eta and
//! framing invariant eta', and the obstruction-block algebra used to
//! normalize surgery quadruples.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::classify::eta_modulus;
use crate::error::{Error, Result};
use crate::exactlinalg::{self, IntMatrix, SmithForm};

/// Where the handles are attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Base {
    D8,
    S2xD6,
}

impl Base {
    pub fn label(self) -> &'static str {
        match self {
            Base::D8 => "D8",
            Base::S2xD6 => "S2xD6",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "D8" => Ok(Base::D8),
            "S2xD6" => Ok(Base::S2xD6),
            other => Err(Error::BadInput(format!("unknown base `{other}`"))),
        }
    }
}

/// A normal framing on an embedded S^3, an element (m, n) of
/// pi_3(SO_4) = Z + Z. The associated D^4-bundle over S^4 has Euler
/// number m + n and first Pontryagin class 2(m - n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FramedComponent {
    pub m: i64,
    pub n: i64,
}

impl FramedComponent {
    pub fn euler(&self) -> i64 {
        self.m + self.n
    }

    /// Half the Pontryagin number, p_1 / 2.
    pub fn half_pontryagin(&self) -> i64 {
        self.m - self.n
    }
}

/// Disjointly embedded framed 3-spheres with their mutual linking numbers.
#[derive(Debug, Clone)]
pub struct FramedLink {
    pub components: Vec<FramedComponent>,
    pub linking: IntMatrix,
    pub base: Base,
}

impl FramedLink {
    pub fn new(components: Vec<FramedComponent>, linking: IntMatrix, base: Base) -> Result<Self> {
        let n = components.len();
        if linking.rows() != n || linking.cols() != n {
            return Err(Error::BadLinking(format!(
                "linking matrix is {}x{}, link has {} components",
                linking.rows(),
                linking.cols(),
                n
            )));
        }
        if let Some((i, j)) = linking.asymmetry_witness() {
            return Err(Error::BadLinking(format!("not symmetric at ({i},{j})")));
        }
        for i in 0..n {
            if !linking.at(i, i).is_zero() {
                return Err(Error::BadLinking(format!("nonzero diagonal entry at {i}")));
            }
        }
        Ok(Self { components, linking, base })
    }
}

/// The 8-manifold spanned by a framed link: intersection form G on the
/// handle classes and the pairing vector pi_i = p_W . [alpha_i].
#[derive(Debug, Clone)]
pub struct HandleManifold8 {
    g: IntMatrix,
    pi: Vec<BigInt>,
    pub base: Base,
}

impl HandleManifold8 {
    /// Direct construction. The parity pi_i = G_ii mod 2 is structural for
    /// handle manifolds and is enforced here.
    pub fn new(g: IntMatrix, pi: Vec<BigInt>, base: Base) -> Result<Self> {
        if let Some((i, j)) = g.asymmetry_witness() {
            return Err(Error::NotSymmetric { i, j });
        }
        if pi.len() != g.rows() {
            return Err(Error::RankMismatch { expected: g.rows(), got: pi.len() });
        }
        for i in 0..pi.len() {
            if !((&pi[i] - g.at(i, i)) % 2u8).is_zero() {
                return Err(Error::BadLinking(format!(
                    "pairing parity violated at {i}: pi = {}, G_ii = {}",
                    pi[i],
                    g.at(i, i)
                )));
            }
        }
        Ok(Self { g, pi, base })
    }

    pub fn g(&self) -> &IntMatrix {
        &self.g
    }

    pub fn pi(&self) -> &[BigInt] {
        &self.pi
    }

    pub fn rank(&self) -> usize {
        self.g.rows()
    }

    pub fn signature(&self) -> Result<i64> {
        if self.rank() == 0 {
            return Ok(0);
        }
        exactlinalg::signature(&self.g)
    }

    pub fn det(&self) -> Result<BigInt> {
        self.g.det()
    }

    fn inverse(&self) -> Result<IntMatrix> {
        exactlinalg::invert_unimodular(&self.g).map_err(|_| Error::BoundaryNotSphere {
            det: self.g.det().map(|d| d.to_string()).unwrap_or_default(),
        })
    }

    /// Block sum of two handle manifolds (disjoint link union).
    pub fn block_sum(&self, other: &Self) -> Self {
        let mut pi = self.pi.clone();
        pi.extend(other.pi.iter().cloned());
        Self { g: self.g.direct_sum(&other.g), pi, base: self.base }
    }
}

/// Build the handle manifold of a framed link: diagonal from the Euler
/// numbers, off-diagonal from linking, p-pairings from the framings.
pub fn build(link: &FramedLink) -> HandleManifold8 {
    let n = link.components.len();
    let mut g = link.linking.clone();
    let mut pi = Vec::with_capacity(n);
    for (i, c) in link.components.iter().enumerate() {
        *g.at_mut(i, i) = BigInt::from(c.euler());
        pi.push(BigInt::from(c.half_pontryagin()));
    }
    HandleManifold8::new(g, pi, link.base).expect("framings satisfy the parity invariant")
}

/// Eells-Kuiper class of the boundary homotopy sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EellsKuiper {
    /// (sigma - pi^T G^-1 pi) / 8, before reduction mod 28.
    pub alpha_int: BigInt,
    /// Residue in Z_28; the boundary is the standard S^7 iff it vanishes.
    pub alpha: u64,
}

impl EellsKuiper {
    pub fn is_standard_sphere(&self) -> bool {
        self.alpha == 0
    }
}

/// alpha = (sigma(G) - pi^T G^-1 pi)/8 mod 28. Requires |det G| = 1; the
/// divisibility of the numerator by 8 always holds for Spin handle
/// manifolds but is checked, not assumed.
pub fn eells_kuiper(h: &HandleManifold8) -> Result<EellsKuiper> {
    let inv = h.inverse()?;
    let sigma = BigInt::from(h.signature()?);
    let w = inv.mul_vec(&h.pi)?;
    let pp: BigInt = h.pi.iter().zip(w.iter()).map(|(a, b)| a * b).sum();
    let num = &sigma - &pp;
    if !(&num % 8u8).is_zero() {
        return Err(Error::EellsKuiperParity(num.to_string()));
    }
    let alpha_int = num / 8u8;
    let alpha = alpha_int.mod_floor(&BigInt::from(28u8)).to_u64().unwrap();
    Ok(EellsKuiper { alpha_int, alpha })
}

/// The Kreck obstruction of a null-bordism: residues of
/// zbar^2 . (z^2 - p_W) and, for d even, zbar^2 . z^2 mod 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KreckObstruction {
    pub d: BigInt,
    /// eta modulus GCD(d, 24), with GCD(0, 24) = 24.
    pub modulus: u64,
    pub eta: u64,
    /// Present only when d is even.
    pub eta_prime: Option<u8>,
}

/// zsq is the pairing vector (functional) of z^2 in the handle basis;
/// the element form is G^-1 zsq.
pub fn kreck_eta(h: &HandleManifold8, zsq: &[BigInt], d: &BigInt) -> Result<KreckObstruction> {
    if zsq.len() != h.rank() {
        return Err(Error::RankMismatch { expected: h.rank(), got: zsq.len() });
    }
    let inv = h.inverse()?;
    let z_elem = inv.mul_vec(zsq)?;
    let zz: BigInt = zsq.iter().zip(z_elem.iter()).map(|(a, b)| a * b).sum();
    let zp: BigInt = h.pi.iter().zip(z_elem.iter()).map(|(a, b)| a * b).sum();
    let m = eta_modulus(d);
    let eta = (&zz - &zp).mod_floor(&BigInt::from(m)).to_u64().unwrap();
    let eta_prime = if (d % 2u8).is_zero() {
        Some(zz.mod_floor(&BigInt::from(2u8)).to_u8().unwrap())
    } else {
        None
    };
    Ok(KreckObstruction { d: d.clone(), modulus: m, eta, eta_prime })
}

/// The two correction blocks of the obstruction-block algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrectionKind {
    /// The twisted S^4-bundle over S^4: form H+, p-element (2, 0).
    S4twistS4,
    /// HP^2 # (-HP^2): form diag(1, -1), p-element (1, -1).
    HP2minusHP2,
}

/// Change of (eta-hat, sz^2.sz^2 mod 2) obtained by rerouting the left
/// inverse through the correction class (0, d) of the given block.
/// Everything is evaluated on the block's form; nothing is hardcoded.
pub fn correction_block(kind: CorrectionKind, d: u64) -> (BigInt, u8) {
    let (form, p): (IntMatrix, Vec<i64>) = match kind {
        CorrectionKind::S4twistS4 => (exactlinalg::hyperbolic_matrix(), vec![2, 0]),
        CorrectionKind::HP2minusHP2 => (
            IntMatrix::from_rows(&[vec![1, 0], vec![0, -1]]).unwrap(),
            vec![1, -1],
        ),
    };
    let corr = vec![BigInt::zero(), BigInt::from(d)];
    let p: Vec<BigInt> = p.into_iter().map(BigInt::from).collect();
    let pair = |a: &[BigInt], b: &[BigInt]| -> BigInt {
        let gb = form.mul_vec(b).unwrap();
        a.iter().zip(gb.iter()).map(|(x, y)| x * y).sum()
    };
    let shifted: Vec<BigInt> = corr.iter().zip(p.iter()).map(|(c, q)| c - q).collect();
    let delta_eta = pair(&corr, &shifted);
    let delta_eta_prime = pair(&corr, &corr).mod_floor(&BigInt::from(2u8)).to_u8().unwrap();
    (delta_eta, delta_eta_prime)
}

/// An integer that may carry a multiple of the symbolic KS91 signature `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymInt {
    pub constant: BigInt,
    pub a_coeff: BigInt,
}

impl SymInt {
    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self { constant: c.into(), a_coeff: BigInt::zero() }
    }

    pub fn symbol() -> Self {
        Self { constant: BigInt::zero(), a_coeff: BigInt::one() }
    }

    pub fn is_concrete(&self) -> bool {
        self.a_coeff.is_zero()
    }

    fn add_mul(&mut self, other: &SymInt, k: &BigInt) {
        self.constant += &other.constant * k;
        self.a_coeff += &other.a_coeff * k;
    }
}

impl std::fmt::Display for SymInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.a_coeff.is_zero() {
            write!(f, "{}", self.constant)
        } else if self.constant.is_zero() {
            write!(f, "{}*a", self.a_coeff)
        } else {
            write!(f, "{} + {}*a", self.constant, self.a_coeff)
        }
    }
}

/// The surgery-obstruction tuple (sigma, alpha, z^4, z^2(z^2 - p_W)/2)
/// of a closed Spin 8-manifold with a degree-6 class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadruple {
    pub sigma: SymInt,
    pub alpha: BigInt,
    pub z4: BigInt,
    pub s2h: BigInt,
}

impl Quadruple {
    pub fn from_i64(sigma: i64, alpha: i64, z4: i64, s2h: i64) -> Self {
        Self {
            sigma: SymInt::from_int(sigma),
            alpha: BigInt::from(alpha),
            z4: BigInt::from(z4),
            s2h: BigInt::from(s2h),
        }
    }

    pub fn zero() -> Self {
        Self::from_i64(0, 0, 0, 0)
    }
}

impl std::fmt::Display for Quadruple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.sigma, self.alpha, self.z4, self.s2h)
    }
}

/// The building blocks of the quadruple bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildingBlock {
    /// Quaternionic projective plane with z = 0.
    HP2,
    /// Boundary-capped sum of 28 copies of the E8 manifold.
    E8x28,
    /// (S^2)^4 with z the sum of the four triple-product classes.
    S2pow4,
    /// The closed Spin 8-manifold with S_1 = S_2 = 0, S_3 = 1; its
    /// signature is not pinned down and stays symbolic.
    KS91gen,
}

/// A closed form model: intersection form on H_4, the element of p_W and
/// the element of z^2 in that basis.
struct FormModel {
    form: IntMatrix,
    p: Vec<BigInt>,
    z2: Vec<BigInt>,
}

impl FormModel {
    fn pair(&self, a: &[BigInt], b: &[BigInt]) -> BigInt {
        let gb = self.form.mul_vec(b).unwrap();
        a.iter().zip(gb.iter()).map(|(x, y)| x * y).sum()
    }

    fn quadruple(&self) -> Quadruple {
        let sigma = if self.form.rows() == 0 {
            BigInt::zero()
        } else {
            BigInt::from(exactlinalg::signature(&self.form).expect("model form nondegenerate"))
        };
        let pp = self.pair(&self.p, &self.p);
        let num = &sigma - &pp;
        assert!((&num % 8u8).is_zero(), "alpha numerator must be divisible by 8");
        let alpha = num / 8u8;
        let z4 = self.pair(&self.z2, &self.z2);
        let z2p = self.pair(&self.z2, &self.p);
        let s2h_num = &z4 - &z2p;
        assert!((&s2h_num % 2u8).is_zero(), "z^2(z^2 - p) must be even");
        Quadruple {
            sigma: SymInt { constant: sigma, a_coeff: BigInt::zero() },
            alpha,
            z4,
            s2h: s2h_num / 2u8,
        }
    }
}

/// The value of a building block: a closed quadruple, or (for the framing
/// twist) a with-boundary correction pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockValue {
    Closed(Quadruple),
    /// (delta eta, delta eta') contributed by changing the boundary framing.
    Boundary { delta_eta: BigInt, delta_eta_prime: u8 },
}

/// Quadruple of a building block, recomputed from its form model where one
/// exists.
pub fn quadruple_of(block: BuildingBlock) -> Quadruple {
    match block {
        BuildingBlock::HP2 => {
            // sigma 1, p_1 = 2h so p_W = h; z = 0
            let model = FormModel {
                form: IntMatrix::from_rows(&[vec![1]]).unwrap(),
                p: vec![BigInt::one()],
                z2: vec![BigInt::zero()],
            };
            model.quadruple()
        }
        BuildingBlock::E8x28 => {
            // parallelizable pieces: p = 0, z = 0; signature adds over blocks
            let e8 = exactlinalg::e8_matrix();
            let sig_block = exactlinalg::signature(&e8).unwrap();
            let mut q = Quadruple::zero();
            q.sigma = SymInt::from_int(28 * sig_block);
            q.alpha = BigInt::from(28 * sig_block) / 8u8;
            q
        }
        BuildingBlock::S2pow4 => {
            // H_4((S^2)^4) = H+ + H+ + H+ on the six products of sphere
            // pairs; z is the sum of the four triple products, so
            // z^2 = z . z hits every pair class twice
            let h = exactlinalg::hyperbolic_matrix();
            let form = h.direct_sum(&h).direct_sum(&h);
            let model = FormModel {
                form,
                p: vec![BigInt::zero(); 6],
                z2: vec![BigInt::from(2u8); 6],
            };
            model.quadruple()
        }
        BuildingBlock::KS91gen => {
            // S_1 = S_2 = 0 and S_3 = 1: alpha = 0, z^2(z^2 - p) = 0 and
            // z^4 = 2S_3 = 2; the signature is left symbolic
            Quadruple {
                sigma: SymInt::symbol(),
                alpha: BigInt::zero(),
                z4: BigInt::from(2u8),
                s2h: BigInt::zero(),
            }
        }
    }
}

/// The with-boundary framing twist N_{1,-1}: z^4 = -1 and z^2 p_W = -1,
/// so eta-hat is preserved and eta' flips.
pub fn framing_twist() -> BlockValue {
    let z4 = BigInt::from(-1);
    let z2p = BigInt::from(-1);
    let delta_eta = &z4 - &z2p;
    let delta_eta_prime = z4.mod_floor(&BigInt::from(2u8)).to_u8().unwrap();
    BlockValue::Boundary { delta_eta, delta_eta_prime }
}

/// Integer linear combination of quadruples.
pub fn quadruple_combine(terms: &[(Quadruple, BigInt)]) -> Quadruple {
    let mut out = Quadruple::zero();
    for (q, k) in terms {
        out.sigma.add_mul(&q.sigma, k);
        out.alpha += &q.alpha * k;
        out.z4 += &q.z4 * k;
        out.s2h += &q.s2h * k;
    }
    out
}

/// Normalize sigma to zero by adding HP2 blocks; returns the corrected
/// quadruple and the (possibly symbolic) HP2 multiplicity used.
pub fn eliminate_sigma_with_hp2(q: &Quadruple) -> (Quadruple, SymInt) {
    let mult = SymInt {
        constant: -q.sigma.constant.clone(),
        a_coeff: -q.sigma.a_coeff.clone(),
    };
    let mut out = q.clone();
    out.sigma = SymInt::from_int(0);
    (out, mult)
}

/// The generator set of the quadruple monoid.
pub fn generators() -> [Quadruple; 4] {
    [
        Quadruple::from_i64(1, 0, 0, 0),
        Quadruple::from_i64(0, 28, 0, 0),
        Quadruple::from_i64(0, 0, 2, 0),
        Quadruple::from_i64(0, 0, 0, 12),
    ]
}

/// Express a concrete target as an integer combination of the generators,
/// by exact Smith-form solving. Unsolvable targets report the obstructing
/// congruence.
pub fn solve_for(target: &Quadruple) -> Result<Vec<BigInt>> {
    if !target.sigma.is_concrete() {
        return Err(Error::Unsolvable("target has symbolic signature".into()));
    }
    let gens = generators();
    // columns are the generators
    let mut entries = Vec::with_capacity(16);
    for row in 0..4 {
        for g in &gens {
            entries.push(match row {
                0 => g.sigma.constant.clone(),
                1 => g.alpha.clone(),
                2 => g.z4.clone(),
                _ => g.s2h.clone(),
            });
        }
    }
    let a = IntMatrix::new(4, 4, entries).unwrap();
    let b = vec![
        target.sigma.constant.clone(),
        target.alpha.clone(),
        target.z4.clone(),
        target.s2h.clone(),
    ];
    solve_integer(&a, &b)
}

#[derive(serde::Deserialize)]
struct LinkFile {
    base: String,
    components: Vec<[i64; 2]>,
    linking: Vec<Vec<i64>>,
}

/// Parse a framed-link description: a TOML document with `base`,
/// `components` (list of [m, n] framings) and `linking` (symmetric integer
/// matrix with zero diagonal).
pub fn parse_link(text: &str) -> Result<FramedLink> {
    let file: LinkFile = toml::from_str(text).map_err(|e| Error::BadInput(e.to_string()))?;
    let base = Base::parse(&file.base)?;
    let components = file
        .components
        .iter()
        .map(|&[m, n]| FramedComponent { m, n })
        .collect();
    let linking = IntMatrix::from_rows(&file.linking)?;
    FramedLink::new(components, linking, base)
}

/// Solve A x = b over the integers via the Smith decomposition.
fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Result<Vec<BigInt>> {
    let SmithForm { u, d, v } = exactlinalg::smith_normal_form(a);
    let ub = u.mul_vec(b)?;
    let k = d.rows().min(d.cols());
    let mut y = vec![BigInt::zero(); d.cols()];
    for i in 0..d.rows() {
        let di = if i < k { d.at(i, i).clone() } else { BigInt::zero() };
        if di.is_zero() {
            if !ub[i].is_zero() {
                return Err(Error::Unsolvable(format!(
                    "component {i} of the reduced target is {} but must vanish",
                    ub[i]
                )));
            }
        } else if !(&ub[i] % &di).is_zero() {
            return Err(Error::Unsolvable(format!(
                "component {i} of the reduced target is {} mod {} (must be 0 mod {})",
                ub[i].mod_floor(&di),
                di,
                di
            )));
        } else {
            y[i] = &ub[i] / &di;
        }
    }
    v.mul_vec(&y)
}
