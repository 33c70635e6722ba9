//! Error type shared across the crate.
//!
//! Errors come in two flavors that the CLI maps to distinct exit codes:
//! rejected inputs (bad arguments, out-of-range lookups) and internal
//! inconsistencies (conditions that indicate a bug, such as a normalized
//! coefficient escaping the [-2, 2] bound).

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("limit must be at least 1")]
    ZeroLimit,

    #[error("limit {requested} exceeds the configured memory budget (max {max})")]
    LimitTooLarge { requested: u64, max: u64 },

    #[error("n = {n} is outside the table range 1..={limit}")]
    TauOutOfRange { n: u64, limit: u64 },

    #[error("prime cutoff {cutoff} exceeds the tau table limit {limit}")]
    CutoffExceedsTable { cutoff: u64, limit: u64 },

    #[error("p = {p} is not a prime in the angle table (cutoff {cutoff})")]
    PrimeNotInTable { p: u64, cutoff: u64 },

    #[error("normalized coefficient bound violated at p = {p}: |a(p)| = {value} > 2 + 1e-9 (implementation bug)")]
    DeligneViolation { p: u64, value: f64 },

    #[error("theta = {0} is outside [0, pi]")]
    ThetaOutOfRange(f64),

    #[error("histogram needs at least 2 bins, got {0}")]
    TooFewBins(usize),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("cannot parse polynomial {input:?}: {reason}")]
    PolynomialParse { input: String, reason: String },

    #[error("polynomial must be monic, got leading coefficient {leading}")]
    NotMonic { leading: String },

    #[error("polynomial must be non-constant")]
    ConstantPolynomial,

    #[error("unitarity grid must have at least 16 points, got {0}")]
    GridTooCoarse(usize),

    #[error("Euler products are only evaluated for Re(s) > 1, got Re(s) = {0}")]
    SigmaOutOfRange(f64),

    #[error("local factor vanishes at p = {p} for s = {s}: pole of the truncated product")]
    PoleDetected { p: u64, s: String },

    #[error("identity requires 2 <= m <= {max}, got m = {m}")]
    IdentityDegreeOutOfRange { m: u32, max: u32 },

    #[error("unknown identity {0:?}; expected zeta, z1-plus, sym-minus, sym-plus, or shimura")]
    UnknownIdentity(String),

    #[error("unknown product family {0:?}; expected zeta, sym:M, zpm:M:(+|-), zf:POLY:(+|-), or zex:M")]
    UnknownSpec(String),

    #[error("sign must be '+' or '-', got {0:?}")]
    BadSign(String),

    #[error("cannot parse {0:?} as a complex number (expected RE or RE,IM)")]
    BadComplex(String),

    #[error("witness search exhausted {subintervals} subintervals without finding a violation for a non-Chebyshev polynomial (implementation bug)")]
    WitnessExhausted { subintervals: u64 },

    #[error("local identity check failed: max coefficient error {max_error} at p = {p}")]
    IdentityCheckFailed { p: u64, max_error: f64 },

    #[error("cache io at {path}: {source}")]
    CacheIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that indicate a bug or broken invariant rather than
    /// a rejected input. The CLI exits 2 for these and 1 otherwise.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::DeligneViolation { .. }
                | Error::WitnessExhausted { .. }
                | Error::IdentityCheckFailed { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
