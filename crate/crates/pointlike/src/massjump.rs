//! Correspondence between the scaling junction of the constant-mass line and
//! the self-adjoint boundary condition of a Hamiltonian whose effective mass
//! jumps at the origin.
//!
//! With the mass on the left normalized to one and ratio `μ = m₊/m₋`, the
//! mass-jump Hamiltonian admits the boundary condition
//! `diag((1+b)/(1-μb), (1-b)/(1+μb))` with `b = 1/sqrt(1+μ+μ²)`. That matrix
//! has determinant `μ`, so it is not symplectic-unitary on its own; the
//! half-line rescaling `x -> λx` with `λ = 1/sqrt(μ)` restores the
//! constant-mass operator and multiplies the boundary rows by `λ^{1/2}` and
//! `λ^{3/2}`. The rescaled matrix is a unit-determinant real diagonal, i.e.
//! a member of the scaling (`delta-one`) family, and matching its entries
//! yields the closed-form strength computed by
//! [`MassJump::delta_one_strength`].

use crate::error::Error;
use crate::junction::{scaled_symplectic_tol, JunctionMatrix};
use crate::mat2::Mat2;

/// Mass ratio `μ = m₊/m₋ > 0`, `μ != 1`. At `μ = 1` the boundary parameter
/// becomes a free parameter of the extension and the closed forms below do
/// not apply; reach that family through the scaling junction directly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassJump {
    ratio: f64,
}

/// Positive rescaling factor for the right half-line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaleFactor(f64);

impl ScaleFactor {
    pub fn new(lambda: f64) -> Result<Self, Error> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "scale factor must be positive and finite, got {lambda}"
            )));
        }
        Ok(Self(lambda))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// Left-multiply by `diag(λ^{1/2}, λ^{3/2})`, the boundary-row weights of
/// the half-line rescaling `x -> λx`.
pub fn rescale_junction(m: &Mat2, scale: ScaleFactor) -> Mat2 {
    let lambda = scale.value();
    let w1 = lambda.sqrt();
    let w2 = lambda * w1;
    Mat2::new(m.m11 * w1, m.m12 * w1, m.m21 * w2, m.m22 * w2)
}

impl MassJump {
    pub fn new(ratio: f64) -> Result<Self, Error> {
        if !(ratio.is_finite() && ratio > 0.0) || ratio == 1.0 {
            return Err(Error::InvalidMassRatio(ratio));
        }
        Ok(Self { ratio })
    }

    pub fn ratio(&self) -> f64 {
        self.ratio
    }

    /// `b = 1/sqrt(1 + μ + μ²)`, evaluated in a form that stays finite for
    /// arbitrarily large ratios.
    pub fn boundary_parameter(&self) -> f64 {
        let mu = self.ratio;
        if mu >= 1.0 {
            (1.0 / mu) / (1.0 + 1.0 / mu + 1.0 / (mu * mu)).sqrt()
        } else {
            1.0 / (1.0 + mu + mu * mu).sqrt()
        }
    }

    // μ·b without forming μ² explicitly.
    fn ratio_times_b(&self) -> f64 {
        let mu = self.ratio;
        if mu >= 1.0 {
            1.0 / (1.0 + 1.0 / mu + 1.0 / (mu * mu)).sqrt()
        } else {
            mu / (1.0 + mu + mu * mu).sqrt()
        }
    }

    /// Boundary-condition matrix `diag((1+b)/(1-μb), (1-b)/(1+μb))` of the
    /// mass-jump Hamiltonian. Its determinant equals the mass ratio, so it
    /// only becomes symplectic-unitary after [`rescale_junction`] with
    /// [`MassJump::scale_factor`].
    ///
    /// The `1 - μb` denominator shrinks like `1/(2μ)`, so the entries
    /// exhaust double precision for ratios beyond roughly `1e15`;
    /// [`MassJump::delta_one_strength`] keeps working far past that.
    pub fn junction(&self) -> Mat2 {
        let b = self.boundary_parameter();
        let mb = self.ratio_times_b();
        Mat2::from_real((1.0 + b) / (1.0 - mb), 0.0, 0.0, (1.0 - b) / (1.0 + mb))
    }

    /// `λ = 1/sqrt(μ)`, the rescaling that maps the mass-jump operator back
    /// to the constant-mass one.
    pub fn scale_factor(&self) -> ScaleFactor {
        ScaleFactor(1.0 / self.ratio.sqrt())
    }

    /// The rescaled boundary matrix, validated into the junction group.
    pub fn rescaled_junction(&self) -> Result<JunctionMatrix, Error> {
        let m = rescale_junction(&self.junction(), self.scale_factor());
        JunctionMatrix::validated(m, scaled_symplectic_tol(&m))
    }

    /// Closed-form strength of the scaling family equivalent to this mass
    /// jump:
    ///
    /// ```text
    /// a = 2 (1 + μ^{5/4} - μ^{1/4}·s + s) / (1 - μ^{5/4} + μ^{1/4}·s + s),
    /// s = sqrt(μ² + μ + 1).
    /// ```
    ///
    /// For ratios above one the numerator and denominator are divided by
    /// `μ^{5/4}` before evaluation, which keeps the expression finite up to
    /// the largest representable ratios.
    pub fn delta_one_strength(&self) -> f64 {
        let mu = self.ratio;
        if mu >= 1.0 {
            // t = s/μ stays near one for large μ; keep the cancellation
            // 1 - t grouped so it is not absorbed by the larger terms
            let t = (1.0 + 1.0 / mu + 1.0 / (mu * mu)).sqrt();
            let small = mu.powf(-1.25) + t * mu.powf(-0.25);
            2.0 * (small + (1.0 - t)) / (small - (1.0 - t))
        } else {
            let s = (1.0 + mu + mu * mu).sqrt();
            let q = mu.powf(0.25);
            let q5 = mu.powf(1.25);
            2.0 * (1.0 + q5 - q * s + s) / (1.0 - q5 + q * s + s)
        }
    }

    /// Same strength extracted through the rescaling pipeline: rescale the
    /// mass-jump matrix, read off the upper-left entry `g` and invert
    /// `g = (2+a)/(2-a)`. Kept separate from the closed form so the two
    /// routes can check each other.
    pub fn delta_one_strength_via_rescaling(&self) -> f64 {
        let rescaled = rescale_junction(&self.junction(), self.scale_factor());
        let g = rescaled.m11.re;
        2.0 * (g - 1.0) / (g + 1.0)
    }
}
