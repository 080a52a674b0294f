use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("domain error in {function}: {detail}")]
    Domain {
        function: &'static str,
        detail: String,
    },

    #[error("{what} did not converge: {detail}")]
    NonConvergence { what: &'static str, detail: String },

    #[error("matrix dimension {dim} exceeds the cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("truncation dominates the displacement at dim {dim}: boundary amplitude {boundary:.3e} in column 0 (increase dim)")]
    TruncationDominated { dim: usize, boundary: f64 },

    #[error("mismatched operands: {0}")]
    Mismatch(String),
}

impl Error {
    pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            function,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
