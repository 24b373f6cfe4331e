//! Boundary data at the origin and junction matrices validated against the
//! symplectic form.
//!
//! A junction matrix `M` relates the boundary vectors on the two sides of
//! the origin through `Γ(0+) = M Γ(0-)` with `Γ = (ψ, ψ')`. The joined
//! dynamics is self-adjoint exactly when `M† Sp M = Sp` for the standard
//! skew form `Sp`, which is the same as conservation of the probability
//! current `j = Im(conj(ψ)·ψ')` across the junction.

use crate::error::Error;
use crate::mat2::Mat2;
use num_complex::Complex64;

/// Acceptance tolerance for the symplectic residual of unit-scale matrices.
///
/// Double precision loses at most a few ulps on 2x2 products, so 1e-12 is a
/// generous bound for matrices with entries of order one. Callers holding
/// matrices with large parameters should widen it, e.g. through
/// [`scaled_symplectic_tol`].
pub const SYMPLECTIC_TOL: f64 = 1e-12;

/// The standard skew-symmetric form on boundary vectors, `[[0,1],[-1,0]]`.
pub const SYMPLECTIC_FORM: Mat2 = Mat2::new(
    Complex64::new(0.0, 0.0),
    Complex64::new(1.0, 0.0),
    Complex64::new(-1.0, 0.0),
    Complex64::new(0.0, 0.0),
);

/// Symplectic tolerance widened for matrices with large entries. The
/// residual of a floating-point product grows like the square of the entry
/// scale, so the acceptance bound has to follow it.
pub fn scaled_symplectic_tol(m: &Mat2) -> f64 {
    SYMPLECTIC_TOL * m.max_norm().max(1.0).powi(2)
}

/// Max-norm of `M† Sp M - Sp`, the defect of the self-adjointness condition.
pub fn symplectic_residual(m: &Mat2) -> f64 {
    (m.adjoint() * SYMPLECTIC_FORM * *m - SYMPLECTIC_FORM).max_norm()
}

/// Wave-function value and first derivative on one side of the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryData {
    psi: Complex64,
    dpsi: Complex64,
}

impl BoundaryData {
    /// Rejects NaN and infinite components; every downstream identity would
    /// be vacuous otherwise.
    pub fn new(psi: Complex64, dpsi: Complex64) -> Result<Self, Error> {
        if !(psi.is_finite() && dpsi.is_finite()) {
            return Err(Error::NonFinite("boundary data"));
        }
        Ok(Self { psi, dpsi })
    }

    pub fn psi(&self) -> Complex64 {
        self.psi
    }

    pub fn dpsi(&self) -> Complex64 {
        self.dpsi
    }

    pub fn norm_sqr(&self) -> f64 {
        self.psi.norm_sqr() + self.dpsi.norm_sqr()
    }

    /// Probability current carried by this boundary data,
    /// `j = (1/2i) Γ† Sp Γ = Im(conj(ψ)·ψ')`.
    pub fn current(&self) -> f64 {
        (self.psi.conj() * self.dpsi).im
    }
}

/// A junction matrix that passed the symplectic-unitarity check; applying it
/// to boundary data conserves the probability current.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JunctionMatrix {
    mat: Mat2,
}

impl JunctionMatrix {
    /// Validates `mat` against the symplectic form within `tolerance`.
    pub fn validated(mat: Mat2, tolerance: f64) -> Result<Self, Error> {
        if !(tolerance.is_finite() && tolerance > 0.0) {
            return Err(Error::InvalidParameter(
                "tolerance must be positive and finite".into(),
            ));
        }
        if !mat.is_finite() {
            return Err(Error::NonFinite("junction matrix"));
        }
        let residual = symplectic_residual(&mat);
        if residual > tolerance {
            return Err(Error::NotSymplectic {
                residual,
                tolerance,
            });
        }
        Ok(Self { mat })
    }

    /// Validates with the default unit-scale tolerance [`SYMPLECTIC_TOL`].
    pub fn validated_default(mat: Mat2) -> Result<Self, Error> {
        Self::validated(mat, SYMPLECTIC_TOL)
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.mat
    }

    /// Residual of the symplectic condition, recomputed on demand.
    pub fn symplectic_residual(&self) -> f64 {
        symplectic_residual(&self.mat)
    }

    /// `Γ(0+) = M Γ(0-)`; the current of the output equals the current of
    /// the input up to rounding.
    pub fn apply(&self, g: &BoundaryData) -> BoundaryData {
        BoundaryData {
            psi: self.mat.m11 * g.psi + self.mat.m12 * g.dpsi,
            dpsi: self.mat.m21 * g.psi + self.mat.m22 * g.dpsi,
        }
    }

    /// Matrix product of two junctions. The symplectic-unitary matrices form
    /// a group, so the product needs no re-validation.
    pub fn compose(&self, other: &JunctionMatrix) -> JunctionMatrix {
        JunctionMatrix {
            mat: self.mat * other.mat,
        }
    }
}
