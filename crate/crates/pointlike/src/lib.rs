//! Point-like junctions of the free one-dimensional Schrödinger operator.
//!
//! A junction is a boundary condition `Γ(0+) = M Γ(0-)` linking the value and
//! first derivative of a wave function across the origin. Matrices compatible
//! with a self-adjoint dynamics form the symplectic-unitary group, and this
//! crate implements the complete toolbox around them:
//!
//! * validated junction matrices, boundary data and the probability current
//!   ([`junction`], [`mat2`]);
//! * the four canonical one-parameter families (delta potential, delta-prime,
//!   localized magnetic flux, scaling junction) plus the general chart over
//!   the group ([`extensions`]);
//! * plane-wave scattering matrices, their closed forms, and time-reversal
//!   diagnostics ([`scattering`]);
//! * the one-to-one correspondence with a step discontinuity of the
//!   effective mass ([`massjump`]);
//! * transfer-matrix regularization of a finite-width magnetic strip and its
//!   zero-width limit ([`regularization`]);
//! * spin-current continuity checks and the resulting magnetic/potential
//!   classification ([`spincurrent`]).
//!
//! ```
//! use pointlike::{classify, smatrix, Canonical, ExtensionClass, DEFAULT_K_GRID};
//!
//! let junction = Canonical::DeltaPotential { strength: 2.0 }.junction()?;
//! let s = smatrix(&junction, 1.0)?;
//! assert!((s.probabilities().reflection - 0.5).abs() < 1e-14);
//!
//! let report = classify(&junction, &DEFAULT_K_GRID)?;
//! assert_eq!(report.label, ExtensionClass::PurePotential);
//! # Ok::<(), pointlike::Error>(())
//! ```

pub mod error;
pub mod extensions;
pub mod junction;
pub mod massjump;
pub mod mat2;
pub mod regularization;
pub mod scattering;
pub mod spincurrent;

pub use error::Error;
pub use extensions::{
    flux_of_gauge_strength, generator, generator_gram, split_flux, Canonical, ExtensionFamily,
    FamilyKind, FluxDecomposition,
};
pub use junction::{
    scaled_symplectic_tol, symplectic_residual, BoundaryData, JunctionMatrix, SYMPLECTIC_FORM,
    SYMPLECTIC_TOL,
};
pub use massjump::{rescale_junction, MassJump, ScaleFactor};
pub use mat2::Mat2;
pub use num_complex::Complex64;
pub use regularization::{
    convergence_study, free_propagation, regularized_junction, strip_transfer, ConvergenceRow,
    StripProblem, TransferMatrix,
};
pub use scattering::{
    closed_form_smatrix, smatrix, time_reversal_deviation, ChannelProbabilities, ScatteringMatrix,
    DEFAULT_K_GRID, TIME_REVERSAL_TOL,
};
pub use spincurrent::{
    classification_table, classify, preserves_pairing, spin_term_jumps, ClassificationReport,
    ExtensionClass, SpinTermJumps, SpinorBoundaryData, TableRow,
};
