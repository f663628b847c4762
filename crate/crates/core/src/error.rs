use thiserror::Error;

/// Errors raised by the quantization, spectra and oracle routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("x = {x} lies outside the open box (0, {length})")]
    OutsideBox { x: f64, length: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("energy {energy} does not exceed the potential minimum {minimum}; no classically allowed region")]
    NoClassicalRegion { energy: f64, minimum: f64 },

    #[error("WKB quantization is unavailable for the infinite square well (turning points are the walls)")]
    WallTurningPoints,

    #[error("{operation}: no convergence, best estimate {estimate} with gap {gap}")]
    Convergence {
        operation: &'static str,
        estimate: f64,
        gap: f64,
    },

    #[error("{operation}: bracket expansion exceeded {limit:e} without reaching the target")]
    Unbounded { operation: &'static str, limit: f64 },

    #[error("symmetric eigensolver: QL iteration did not converge after {iterations} sweeps")]
    EigenNonConvergence { iterations: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
