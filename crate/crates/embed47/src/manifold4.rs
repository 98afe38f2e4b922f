//! Closed simply-connected 4-manifolds presented by their intersection forms.
//!
//! For H_1(N) = 0 everything the classification needs — signature, spin-ness,
//! the characteristic coset of w_2 — is derived from the form, so a manifold
//! here is a named unimodular form and nothing more.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::lattice::UnimodularForm;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourManifold {
    pub name: String,
    form: UnimodularForm,
}

impl FourManifold {
    pub fn new(name: impl Into<String>, form: UnimodularForm) -> Self {
        Self { name: name.into(), form }
    }

    pub fn form(&self) -> &UnimodularForm {
        &self.form
    }

    pub fn rank(&self) -> usize {
        self.form.rank()
    }

    pub fn signature(&self) -> i64 {
        self.form.signature()
    }

    pub fn is_spin(&self) -> bool {
        self.form.is_even()
    }

    /// Catalogue of standard manifolds. Accepts a single label from
    /// {S4, S2xS2, CP2, CP2bar, K3like} or a `#`-separated connected sum
    /// of such labels.
    pub fn make_standard(which: &str) -> Result<Self> {
        let parts: Vec<&str> = which.split('#').map(str::trim).collect();
        if parts.len() > 1 {
            let mut acc = Self::make_single(parts[0])?;
            for p in &parts[1..] {
                acc = acc.connected_sum(&Self::make_single(p)?);
            }
            return Ok(acc);
        }
        Self::make_single(which.trim())
    }

    fn make_single(label: &str) -> Result<Self> {
        let form = match label {
            "S4" => UnimodularForm::rank_zero(),
            "S2xS2" => UnimodularForm::hyperbolic(),
            "CP2" => UnimodularForm::diag_one(1),
            "CP2bar" => UnimodularForm::diag_one(-1),
            // sign convention: signature -16
            "K3like" => UnimodularForm::e8(-1)
                .direct_sum(&UnimodularForm::e8(-1))
                .direct_sum(&UnimodularForm::hyperbolic())
                .direct_sum(&UnimodularForm::hyperbolic())
                .direct_sum(&UnimodularForm::hyperbolic()),
            other => return Err(Error::UnknownLabel(other.to_string())),
        };
        Ok(Self::new(label, form))
    }

    pub fn connected_sum(&self, other: &Self) -> Self {
        Self {
            name: format!("{}#{}", self.name, other.name),
            form: self.form.direct_sum(&other.form),
        }
    }
}

#[derive(Deserialize)]
struct ManifoldFile {
    name: String,
    form: Vec<Vec<i64>>,
}

/// Parse a manifold description: a TOML document with `name` (string) and
/// `form` (integer matrix as a list of rows). Validation failures name the
/// violated invariant.
pub fn parse_manifold(text: &str) -> Result<FourManifold> {
    let file: ManifoldFile =
        toml::from_str(text).map_err(|e| Error::BadInput(e.to_string()))?;
    let form = UnimodularForm::from_rows(&file.form)?;
    Ok(FourManifold::new(file.name, form))
}
