//! Error taxonomy shared by the whole engine.
//!
//! The CLI maps these onto exit codes: usage errors → 2, domain errors → 1,
//! verification failures → 3.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Caller violated an interface contract (shape mismatch, unknown name,
    /// malformed input file).
    #[error("usage error: {0}")]
    Usage(String),

    /// Mathematically well-posed request that has no answer for this input
    /// (no unit, no generic inverse, pole on an integration path).
    #[error("domain error: {0}")]
    Domain(String),

    /// An internal cross-check that must hold by theory failed; indicates a
    /// solver bug, never bad user input.
    #[error("verification failure: {0}")]
    Verification(String),
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }
}
