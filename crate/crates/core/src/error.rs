use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot evaluate a Laurent polynomial at t = 0")]
    EvalAtZero,
    #[error("matrix is not square: {rows} rows, row {row} has {cols} entries")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("matrix size {0} is odd; Seifert matrices have even size")]
    OddSize(usize),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("basis change is not unimodular (det = {0})")]
    NotUnimodular(String),
    #[error("integer overflow during {0}")]
    Overflow(&'static str),
    #[error("theta_n requires n >= 1, got {0}")]
    ThetaIndex(i64),
    #[error("random symplectic basis change requires g >= 1")]
    ZeroGenus,
    #[error("certificate has {found} second-stage genera, expected {expected}")]
    CertificateLength { expected: usize, found: usize },
    #[error("basis enumerator requires a nontrivial alpha-companion (gA >= 1)")]
    TrivialAlphaCompanion,
    #[error("cap {cap} insufficient to certify the minimum (best found {best})")]
    CapInsufficient { cap: u64, best: u64 },
    #[error("cap must be positive")]
    ZeroCap,
}

pub type Result<T> = std::result::Result<T, Error>;
