use thiserror::Error;

/// Errors produced by the library.
///
/// `Config` variants indicate invalid input (bad parameters, malformed
/// curve files); the rest indicate numerical failures during a run.
#[derive(Error, Debug)]
pub enum Error {
    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("adaptive quadrature failed to converge on [{a}, {b}] (tol {tol})")]
    QuadratureNonConvergence { a: f64, b: f64, tol: f64 },

    #[error(
        "coincident points in kernel evaluation (chi = {chi}) at target (r={r}, z={z}), \
         source (r={rp}, z={zp})"
    )]
    CoincidentPoints {
        chi: f64,
        r: f64,
        z: f64,
        rp: f64,
        zp: f64,
    },

    #[error("assembly failed for block ({p}, {q}), target node {i}: {reason}")]
    AssemblyFailure {
        p: usize,
        q: usize,
        i: usize,
        reason: String,
    },

    #[error("system for mode n = {mode} is numerically singular (rcond ~ {rcond:.3e})")]
    SingularMode { mode: usize, rcond: f64 },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by bad input rather than numerical failure.
    pub fn is_config(&self) -> bool {
        matches!(self, Error::Config(_) | Error::Domain(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
