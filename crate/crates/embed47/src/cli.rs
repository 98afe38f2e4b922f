//! Report builders for the command-line frontend. Every report serializes
//! to JSON field-for-field with the text rendering, so golden tests can
//! diff either representation.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::classify;
use crate::error::{Error, Result};
use crate::lattice::HomClass;
use crate::manifold4::FourManifold;
use crate::surgery::{self, FramedLink, Quadruple, SymInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Serialize)]
pub struct ClassifyRow {
    pub u: String,
    pub divisibility: String,
    pub fiber_count: u64,
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub manifold: String,
    pub rank: usize,
    pub signature: i64,
    pub spin: bool,
    pub bound: u32,
    pub truncated: bool,
    pub rows: Vec<ClassifyRow>,
    pub total: u64,
}

pub fn cmd_classify(manifold: &FourManifold, bound: u32) -> ClassifyReport {
    let img = classify::bh_image(manifold, bound);
    let rows: Vec<ClassifyRow> = img
        .classes
        .iter()
        .map(|c| ClassifyRow {
            u: c.u.to_string(),
            divisibility: c.u.divisibility().to_string(),
            fiber_count: classify::fiber_count(manifold, c),
        })
        .collect();
    let total = rows.iter().map(|r| r.fiber_count).sum();
    ClassifyReport {
        manifold: manifold.name.clone(),
        rank: manifold.rank(),
        signature: manifold.signature(),
        spin: manifold.is_spin(),
        bound,
        truncated: img.truncated,
        rows,
        total,
    }
}

impl ClassifyReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "manifold: {}", self.manifold).unwrap();
        writeln!(s, "rank: {}", self.rank).unwrap();
        writeln!(s, "signature: {}", self.signature).unwrap();
        writeln!(s, "spin: {}", self.spin).unwrap();
        writeln!(s, "bound: {}", self.bound).unwrap();
        writeln!(s, "truncated: {}", self.truncated).unwrap();
        writeln!(s, "u\td(u)\tfiber count").unwrap();
        for r in &self.rows {
            writeln!(s, "{}\t{}\t{}", r.u, r.divisibility, r.fiber_count).unwrap();
        }
        writeln!(s, "total: {}", self.total).unwrap();
        s
    }
}

#[derive(Serialize)]
pub struct FiberReport {
    pub manifold: String,
    pub u: String,
    pub divisibility: String,
    pub modulus: u64,
    pub fiber_count: u64,
    pub residues: Vec<u64>,
}

pub fn cmd_fiber(manifold: &FourManifold, u: HomClass) -> Result<FiberReport> {
    let class = classify::bh_class(manifold, u)?;
    let fiber = classify::enumerate_fiber(manifold, &class);
    let d = class.u.divisibility();
    Ok(FiberReport {
        manifold: manifold.name.clone(),
        u: class.u.to_string(),
        divisibility: d.to_string(),
        modulus: classify::eta_modulus(&d),
        fiber_count: classify::fiber_count(manifold, &class),
        residues: fiber.iter().map(|e| e.eta).collect(),
    })
}

impl FiberReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "manifold: {}", self.manifold).unwrap();
        writeln!(s, "u: {}", self.u).unwrap();
        writeln!(s, "d(u): {}", self.divisibility).unwrap();
        writeln!(s, "modulus: {}", self.modulus).unwrap();
        writeln!(s, "fiber count: {}", self.fiber_count).unwrap();
        let residues: Vec<String> = self.residues.iter().map(u64::to_string).collect();
        writeln!(s, "eta residues: {{{}}}", residues.join(",")).unwrap();
        s
    }
}

#[derive(Serialize)]
pub struct ActReport {
    pub manifold: String,
    pub u: String,
    pub modulus: u64,
    pub eta: u64,
    pub k: u64,
    pub eta_after: u64,
}

pub fn cmd_act(manifold: &FourManifold, u: HomClass, eta: u64, k: u64) -> Result<ActReport> {
    let class = classify::bh_class(manifold, u)?;
    let m = classify::eta_modulus(&class.u.divisibility());
    if eta >= m || (m % 2 == 0 && eta % 2 != 0) {
        return Err(Error::NotBhClass(format!(
            "eta = {eta} is not an even residue modulo {m}"
        )));
    }
    let e = classify::EmbeddingClass { u: class.u.clone(), eta, modulus: m };
    let after = classify::act(&e, k);
    Ok(ActReport {
        manifold: manifold.name.clone(),
        u: class.u.to_string(),
        modulus: m,
        eta,
        k,
        eta_after: after.eta,
    })
}

impl ActReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "manifold: {}", self.manifold).unwrap();
        writeln!(s, "u: {}", self.u).unwrap();
        writeln!(s, "modulus: {}", self.modulus).unwrap();
        writeln!(s, "eta: {}", self.eta).unwrap();
        writeln!(s, "k: {}", self.k).unwrap();
        writeln!(s, "eta after #k g_1: {}", self.eta_after).unwrap();
        s
    }
}

#[derive(Serialize)]
pub struct SumCountReport {
    pub d1: u64,
    pub d2: u64,
    pub fiber_count: u64,
}

pub fn cmd_sum_count(d1: u64, d2: u64) -> SumCountReport {
    SumCountReport { d1, d2, fiber_count: classify::connected_sum_fiber_count(d1, d2) }
}

impl SumCountReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "d1: {}", self.d1).unwrap();
        writeln!(s, "d2: {}", self.d2).unwrap();
        writeln!(s, "fiber count over a1+a2: {}", self.fiber_count).unwrap();
        s
    }
}

#[derive(Serialize)]
pub struct EkSection {
    pub alpha: u64,
    pub alpha_int: String,
    pub verdict: String,
}

#[derive(Serialize)]
pub struct HandlesReport {
    pub base: String,
    pub rank: usize,
    pub g: Vec<Vec<String>>,
    pub pi: Vec<String>,
    pub signature: i64,
    pub det: String,
    pub unimodular: bool,
    pub eells_kuiper: Option<EkSection>,
}

pub fn cmd_handles(link: &FramedLink) -> Result<HandlesReport> {
    let h = surgery::build(link);
    let det = h.det()?;
    let unimodular = det == BigInt::from(1) || det == BigInt::from(-1);
    let eells_kuiper = if unimodular {
        let ek = surgery::eells_kuiper(&h)?;
        Some(EkSection {
            alpha: ek.alpha,
            alpha_int: ek.alpha_int.to_string(),
            verdict: if ek.is_standard_sphere() { "standard S7" } else { "exotic" }.into(),
        })
    } else {
        None
    };
    let signature = if h.rank() == 0 { 0 } else { h.signature()? };
    Ok(HandlesReport {
        base: link.base.label().into(),
        rank: h.rank(),
        g: h.g()
            .row_slices()
            .iter()
            .map(|r| r.iter().map(BigInt::to_string).collect())
            .collect(),
        pi: h.pi().iter().map(BigInt::to_string).collect(),
        signature,
        det: det.to_string(),
        unimodular,
        eells_kuiper,
    })
}

impl HandlesReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "base: {}", self.base).unwrap();
        writeln!(s, "rank: {}", self.rank).unwrap();
        writeln!(s, "G:").unwrap();
        for row in &self.g {
            writeln!(s, "  [{}]", row.join(",")).unwrap();
        }
        writeln!(s, "pi: [{}]", self.pi.join(",")).unwrap();
        writeln!(s, "signature: {}", self.signature).unwrap();
        writeln!(s, "det: {}", self.det).unwrap();
        writeln!(s, "unimodular: {}", self.unimodular).unwrap();
        if let Some(ek) = &self.eells_kuiper {
            writeln!(s, "eells-kuiper: {} mod 28 (value {})", ek.alpha, ek.alpha_int).unwrap();
            writeln!(s, "boundary: {}", ek.verdict).unwrap();
        }
        s
    }
}

#[derive(Serialize)]
pub struct EkReport {
    pub alpha: u64,
    pub alpha_int: String,
    pub verdict: String,
}

pub fn cmd_ek(link: &FramedLink) -> Result<EkReport> {
    let h = surgery::build(link);
    let ek = surgery::eells_kuiper(&h)?;
    Ok(EkReport {
        alpha: ek.alpha,
        alpha_int: ek.alpha_int.to_string(),
        verdict: if ek.is_standard_sphere() { "standard S7" } else { "exotic" }.into(),
    })
}

impl EkReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "eells-kuiper: {} mod 28 (value {})", self.alpha, self.alpha_int).unwrap();
        writeln!(s, "boundary: {}", self.verdict).unwrap();
        s
    }
}

#[derive(Serialize)]
pub struct EtaReport {
    pub d: String,
    pub modulus: u64,
    pub eta: u64,
    pub eta_prime: Option<u8>,
}

pub fn cmd_eta(link: &FramedLink, zsq: &[BigInt], d: &BigInt) -> Result<EtaReport> {
    let h = surgery::build(link);
    let k = surgery::kreck_eta(&h, zsq, d)?;
    Ok(EtaReport {
        d: k.d.to_string(),
        modulus: k.modulus,
        eta: k.eta,
        eta_prime: k.eta_prime,
    })
}

impl EtaReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "d: {}", self.d).unwrap();
        writeln!(s, "eta: {} mod {}", self.eta, self.modulus).unwrap();
        match self.eta_prime {
            Some(p) => writeln!(s, "eta': {p} mod 2").unwrap(),
            None => writeln!(s, "eta': absent (d odd)").unwrap(),
        }
        s
    }
}

#[derive(Serialize)]
pub struct QuadruplesReport {
    pub target: String,
    pub solvable: bool,
    /// Multiplicities of the generators (1,0,0,0), (0,28,0,0), (0,0,2,0),
    /// (0,0,0,12), when solvable.
    pub multiplicities: Option<Vec<String>>,
    pub obstruction: Option<String>,
}

pub fn cmd_quadruples(target: &Quadruple) -> QuadruplesReport {
    match surgery::solve_for(target) {
        Ok(mults) => QuadruplesReport {
            target: target.to_string(),
            solvable: true,
            multiplicities: Some(mults.iter().map(BigInt::to_string).collect()),
            obstruction: None,
        },
        Err(e) => QuadruplesReport {
            target: target.to_string(),
            solvable: false,
            multiplicities: None,
            obstruction: Some(e.to_string()),
        },
    }
}

impl QuadruplesReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "target: {}", self.target).unwrap();
        writeln!(s, "solvable: {}", self.solvable).unwrap();
        if let Some(m) = &self.multiplicities {
            writeln!(
                s,
                "combination: {}*(1,0,0,0) + {}*(0,28,0,0) + {}*(0,0,2,0) + {}*(0,0,0,12)",
                m[0], m[1], m[2], m[3]
            )
            .unwrap();
        }
        if let Some(o) = &self.obstruction {
            writeln!(s, "obstruction: {o}").unwrap();
        }
        s
    }
}

/// Parse a comma-separated integer vector.
pub fn parse_vector(s: &str) -> Result<Vec<BigInt>> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::BadInput(format!("invalid integer `{t}`")))
        })
        .collect()
}

/// Parse "sigma,alpha,z4,s" into a quadruple.
pub fn parse_quadruple(s: &str) -> Result<Quadruple> {
    let v = parse_vector(s)?;
    if v.len() != 4 {
        return Err(Error::BadInput(format!(
            "quadruple needs 4 components, got {}",
            v.len()
        )));
    }
    Ok(Quadruple {
        sigma: SymInt { constant: v[0].clone(), a_coeff: BigInt::from(0) },
        alpha: v[1].clone(),
        z4: v[2].clone(),
        s2h: v[3].clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_s4() {
        let s4 = FourManifold::make_standard("S4").unwrap();
        let r = cmd_classify(&s4, 8);
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].fiber_count, 12);
        assert_eq!(r.total, 12);
        assert!(!r.truncated);
    }

    #[test]
    fn classify_s2xs2_counts() {
        let n = FourManifold::make_standard("S2xS2").unwrap();
        let r = cmd_classify(&n, 6);
        assert!(r.truncated);
        for row in &r.rows {
            let d: u64 = row.divisibility.parse().unwrap();
            let expect = classify::fiber_count_for_divisibility(&BigInt::from(d));
            assert_eq!(row.fiber_count, expect);
        }
    }

    #[test]
    fn structured_output_is_deterministic() {
        let n = FourManifold::make_standard("S2xS2").unwrap();
        let a = serde_json::to_string_pretty(&cmd_classify(&n, 4)).unwrap();
        let b = serde_json::to_string_pretty(&cmd_classify(&n, 4)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn quadruples_reports() {
        let solvable = cmd_quadruples(&Quadruple::from_i64(0, 0, 24, 12));
        assert!(solvable.solvable);
        let blocked = cmd_quadruples(&Quadruple::from_i64(0, 0, 1, 0));
        assert!(!blocked.solvable);
        assert!(blocked.obstruction.is_some());
    }

    #[test]
    fn act_report() {
        let s4 = FourManifold::make_standard("S4").unwrap();
        let r = cmd_act(&s4, HomClass::zero(0), 0, 1).unwrap();
        assert_eq!(r.eta_after, 2);
        assert!(cmd_act(&s4, HomClass::zero(0), 3, 1).is_err());
        assert!(cmd_act(&s4, HomClass::zero(0), 24, 1).is_err());
    }

    #[test]
    fn vector_and_quadruple_parsing() {
        assert_eq!(parse_vector("1, -2,3").unwrap(), vec![
            BigInt::from(1),
            BigInt::from(-2),
            BigInt::from(3)
        ]);
        assert!(parse_vector("1,x").is_err());
        assert_eq!(
            parse_quadruple("224,28,0,0").unwrap(),
            Quadruple::from_i64(224, 28, 0, 0)
        );
        assert!(parse_quadruple("1,2,3").is_err());
    }
}
