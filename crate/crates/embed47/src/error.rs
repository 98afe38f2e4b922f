use thiserror::Error;

/// Errors shared by every layer of the crate. Each variant names the
/// invariant that failed so CLI diagnostics can point at the exact problem.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix dimensions invalid: {0}")]
    BadDimensions(String),

    #[error("rank mismatch: expected length {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("form not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("form not unimodular: |det| = {det}")]
    NotUnimodular { det: String },

    #[error("form degenerate: determinant is zero")]
    Degenerate,

    #[error("unknown manifold label `{0}`")]
    UnknownLabel(String),

    #[error("linking matrix invalid: {0}")]
    BadLinking(String),

    #[error("boundary not a homotopy sphere: |det G| = {det}")]
    BoundaryNotSphere { det: String },

    #[error("Eells-Kuiper numerator {0} not divisible by 8")]
    EellsKuiperParity(String),

    #[error("not a Boechat-Haefliger class: {0}")]
    NotBhClass(String),

    #[error("unsolvable: {0}")]
    Unsolvable(String),

    #[error("invalid input file: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
