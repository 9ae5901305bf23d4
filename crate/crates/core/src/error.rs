use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants split into usage errors (bad input) and computational refusals
/// (caps, poles, truncation); see [`Error::is_refusal`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed partition {input:?}: {reason}")]
    PartitionParse { input: String, reason: String },

    #[error("weight mismatch: {left} has weight {left_weight}, {right} has weight {right_weight}")]
    WeightMismatch {
        left: String,
        left_weight: usize,
        right: String,
        right_weight: usize,
    },

    #[error("colength {colength} is out of range for n = {n} (must be at most n - 1)")]
    ColengthOutOfRange { n: usize, colength: usize },

    #[error("empty profile list")]
    EmptyProfiles,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("singular parameters: factor {factor} vanishes ({detail})")]
    Pole { factor: String, detail: String },

    #[error("{what}: n = {requested} exceeds the cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("under-truncated series: exponent {exponent} of {variable} exceeds its cap {cap}")]
    UnderTruncation {
        variable: String,
        exponent: u32,
        cap: u32,
    },

    #[error("cache i/o on {path}: {source}")]
    CacheIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("element is not central: coefficients differ inside class {class}")]
    NotCentral { class: String },
}

impl Error {
    /// True for computational refusals (caps, poles, truncation), false for
    /// malformed or inconsistent input.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::Pole { .. }
                | Error::CapExceeded { .. }
                | Error::UnderTruncation { .. }
                | Error::CacheIo { .. }
                | Error::NotCentral { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
