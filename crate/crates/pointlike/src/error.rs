use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A NaN or infinite component reached a public constructor.
    #[error("non-finite entry in {0}")]
    NonFinite(&'static str),

    /// The symplectic-unitarity residual exceeds the acceptance tolerance,
    /// so the matrix does not define a self-adjoint junction.
    #[error("matrix is not symplectic-unitary: residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    NotSymplectic { residual: f64, tolerance: f64 },

    /// A constructor or solver argument is outside its admissible domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The plane-wave matching system has no unique solution at this
    /// wavenumber.
    #[error("plane-wave matching system is singular at k = {k}")]
    SingularMatching { k: f64 },

    /// Mass ratios must be positive and different from 1; at ratio 1 the
    /// boundary parameter is a free parameter of the extension instead.
    #[error("mass ratio must be positive and different from 1 (at ratio 1 the boundary parameter is a free parameter of the extension), got {0}")]
    InvalidMassRatio(f64),

    /// The fixed-step integrator was asked to run outside its resolution
    /// guard.
    #[error("integration resolution guard failed: {0}")]
    Resolution(String),

    /// The matrix mixes the canonical strata and cannot be assigned a single
    /// classification label.
    #[error("junction matrix does not match any canonical family (time-reversal deviation {time_reversal_deviation:.3e}, pairing preserved: {pairing_ok})")]
    Unclassified {
        time_reversal_deviation: f64,
        pairing_ok: bool,
    },

    /// Live classification disagrees with the reference table; this is a
    /// regression signal, not a user error.
    #[error("live classification of family {family} disagrees with the reference table: expected {expected}, got {actual}")]
    TableMismatch {
        family: &'static str,
        expected: &'static str,
        actual: &'static str,
    },
}
