//! Plane-wave scattering across a junction.
//!
//! For a wave incident from the left, `ψ = exp(ikx) + A₊ exp(-ikx)` on the
//! left half-line and `ψ = B₊ exp(ikx)` on the right; for incidence from the
//! right, `ψ = exp(-ikx) + A₋ exp(ikx)` on the right and `B₋ exp(-ikx)` on
//! the left. The scattering matrix collects the amplitudes as
//! `S = [[A₊, B₊], [B₋, A₋]]`; it is unitary whenever the junction conserves
//! the probability current.
//!
//! The generic solver works directly on the 2x2 matching system, so the
//! closed forms of the canonical families can be checked against it rather
//! than against themselves. `S(-k)`, needed for the time-reversal test
//! `S*(k) = S(-k)`, is obtained by re-solving the matching system with the
//! incoming and outgoing exponentials exchanged, which is the analytic
//! continuation `k -> -k` of the same formulas.

use crate::error::Error;
use crate::extensions::Canonical;
use crate::junction::JunctionMatrix;
use crate::mat2::Mat2;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Deviation threshold of the time-reversal test below which a junction
/// counts as time-reversal symmetric (potential, nonmagnetic).
pub const TIME_REVERSAL_TOL: f64 = 1e-12;

/// Default wavenumber grid for symmetry diagnostics. It straddles the
/// crossover scales of the delta family (reflecting at low k) and the
/// delta-prime family (reflecting at high k).
pub const DEFAULT_K_GRID: [f64; 6] = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0];

const SINGULAR_REL_TOL: f64 = 1e-14;

/// Unitary matrix of reflection and transmission amplitudes at a fixed
/// wavenumber, arranged as `[[A₊, B₊], [B₋, A₋]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringMatrix {
    s: Mat2,
    k: f64,
}

/// Reflection and transmission probabilities of one incidence channel;
/// unitarity makes them sum to one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelProbabilities {
    pub reflection: f64,
    pub transmission: f64,
}

impl ScatteringMatrix {
    fn from_parts(s: Mat2, k: f64) -> Self {
        Self { s, k }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.s
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// Left-incidence reflection amplitude.
    pub fn a_plus(&self) -> Complex64 {
        self.s.m11
    }

    /// Left-incidence transmission amplitude.
    pub fn b_plus(&self) -> Complex64 {
        self.s.m12
    }

    /// Right-incidence transmission amplitude.
    pub fn b_minus(&self) -> Complex64 {
        self.s.m21
    }

    /// Right-incidence reflection amplitude.
    pub fn a_minus(&self) -> Complex64 {
        self.s.m22
    }

    /// Max-norm of `S†S - I`.
    pub fn unitarity_residual(&self) -> f64 {
        (self.s.adjoint() * self.s - Mat2::IDENTITY).max_norm()
    }

    /// `R = |A₊|²`, `T = |B₊|²` for the left-incidence channel.
    pub fn probabilities(&self) -> ChannelProbabilities {
        ChannelProbabilities {
            reflection: self.s.m11.norm_sqr(),
            transmission: self.s.m12.norm_sqr(),
        }
    }
}

/// Solve the matching system at signed wavenumber `k != 0` and return the
/// raw amplitude matrix `[[A₊, B₊], [B₋, A₋]]`.
///
/// For a matrix satisfying the symplectic condition exactly the denominator
/// cannot vanish at real k: combining its real and imaginary parts with the
/// condition forces `(|m11| - |k||m12|)² + 1 <= 0`. The singularity guard
/// only protects the near-singular neighbourhood admitted by finite
/// validation tolerances.
fn solve_matching(m: &Mat2, k: f64) -> Result<Mat2, Error> {
    let ik = Complex64::new(0.0, k);
    let ksq = Complex64::new(k * k, 0.0);
    let denom = ik * (m.m11 + m.m22) + ksq * m.m12 - m.m21;
    let scale = k.abs() * (m.m11.norm() + m.m22.norm()) + k * k * m.m12.norm() + m.m21.norm();
    if !denom.is_finite() || denom.norm() <= SINGULAR_REL_TOL * scale.max(f64::MIN_POSITIVE) {
        return Err(Error::SingularMatching { k });
    }
    let one = Complex64::new(1.0, 0.0);
    let a_plus = (m.m21 + ik * (m.m22 - m.m11) + ksq * m.m12) / denom;
    let b_plus = m.m11 * (one + a_plus) + ik * m.m12 * (one - a_plus);
    let b_minus = (ik + ik) / denom;
    let a_minus = (m.m21 + ik * (m.m11 - m.m22) + ksq * m.m12) / denom;
    Ok(Mat2::new(a_plus, b_plus, b_minus, a_minus))
}

/// Scattering matrix of a validated junction at wavenumber `k > 0`,
/// computed by the generic matching solver.
pub fn smatrix(junction: &JunctionMatrix, k: f64) -> Result<ScatteringMatrix, Error> {
    if !(k.is_finite() && k > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "wavenumber must be positive and finite, got {k}"
        )));
    }
    let s = solve_matching(junction.matrix(), k)?;
    Ok(ScatteringMatrix::from_parts(s, k))
}

/// Closed-form scattering matrix of a canonical family. The flux and
/// scaling families do not depend on `k`, but accept it for interface
/// uniformity.
pub fn closed_form_smatrix(family: &Canonical, k: f64) -> Result<ScatteringMatrix, Error> {
    if !(k.is_finite() && k > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "wavenumber must be positive and finite, got {k}"
        )));
    }
    let zero = Complex64::new(0.0, 0.0);
    let s = match family {
        Canonical::DeltaPotential { strength } => {
            let denom = Complex64::new(2.0 * k, *strength);
            let diag = Complex64::new(0.0, -strength) / denom;
            let off = Complex64::new(2.0 * k, 0.0) / denom;
            Mat2::new(diag, off, off, diag)
        }
        Canonical::DeltaPrime { strength } => {
            let denom = Complex64::new(2.0, k * strength);
            let diag = Complex64::new(0.0, k * strength) / denom;
            let off = Complex64::new(2.0, 0.0) / denom;
            Mat2::new(diag, off, off, diag)
        }
        Canonical::MagneticFlux { flux } => {
            let fractional = crate::extensions::split_flux(*flux).fractional;
            Mat2::new(
                zero,
                Complex64::from_polar(1.0, TAU * fractional),
                Complex64::from_polar(1.0, -TAU * fractional),
                zero,
            )
        }
        Canonical::DeltaOne { strength } => {
            if *strength == 2.0 || *strength == -2.0 {
                return Err(Error::InvalidParameter(
                    "delta-one strength must differ from +/-2 (half-lines decouple)".into(),
                ));
            }
            // theta/2 has tangent (2+a)/(2-a); only cos(theta) and
            // sin(theta) enter, so the branch of theta is irrelevant.
            let theta = 2.0 * (2.0 + strength).atan2(2.0 - strength);
            Mat2::from_real(theta.cos(), theta.sin(), theta.sin(), -theta.cos())
        }
    };
    Ok(ScatteringMatrix::from_parts(s, k))
}

/// Maximum of `‖S*(k) - S(-k)‖` over the grid. Values at rounding level
/// label the junction time-reversal symmetric (potential); order-one values
/// label it magnetic.
pub fn time_reversal_deviation(junction: &JunctionMatrix, k_grid: &[f64]) -> Result<f64, Error> {
    let mut worst = 0.0f64;
    for &k in k_grid {
        if !(k.is_finite() && k > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "time-reversal grid must contain positive wavenumbers, got {k}"
            )));
        }
        let forward = solve_matching(junction.matrix(), k)?;
        let backward = solve_matching(junction.matrix(), -k)?;
        worst = worst.max((forward.conj() - backward).max_norm());
    }
    Ok(worst)
}
