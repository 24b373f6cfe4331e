//! Finite-width regularization of the localized magnetic flux.
//!
//! Inside a strip of dimensionless width `w` the transverse amplitude obeys
//! `χ'' = (4 α² x² - ε) χ`, and crossing the strip also accumulates the
//! gauge phase `exp(2πi α)`. The module integrates the strip equation with a
//! fixed-step fourth-order method, composes the transfer matrix with the
//! phase and follows the junction into the zero-width limit, where it
//! reproduces the pure flux junction `exp(2πi α)·I` for both the wave
//! function and its derivative.

use crate::error::Error;
use crate::junction::JunctionMatrix;
use crate::mat2::Mat2;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Minimum number of integration steps accepted by the resolution guard.
pub const MIN_STEPS: usize = 100;

/// Upper bound on `h·sqrt(ε)` per integration step.
pub const STEP_SCALE_LIMIT: f64 = 0.1;

const DET_TOL: f64 = 1e-10;

/// Dimensionless strip data: flux `alpha` in flux quanta, energy `epsilon`
/// and width, all in the strip's natural units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripProblem {
    alpha: f64,
    epsilon: f64,
    width: f64,
}

impl StripProblem {
    pub fn new(alpha: f64, epsilon: f64, width: f64) -> Result<Self, Error> {
        if !(alpha.is_finite() && epsilon.is_finite() && width.is_finite()) {
            return Err(Error::NonFinite("strip parameters"));
        }
        if epsilon <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "strip energy must be positive, got {epsilon}"
            )));
        }
        if width <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "strip width must be positive, got {width}"
            )));
        }
        Ok(Self {
            alpha,
            epsilon,
            width,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn width(&self) -> f64 {
        self.width
    }
}

/// Real transfer matrix propagating `(χ, χ')` from the left edge of the
/// strip to the right edge. The Wronskian of the real second-order equation
/// forces determinant one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferMatrix {
    entries: [[f64; 2]; 2],
}

impl TransferMatrix {
    pub fn entries(&self) -> &[[f64; 2]; 2] {
        &self.entries
    }

    pub fn det(&self) -> f64 {
        self.entries[0][0] * self.entries[1][1] - self.entries[0][1] * self.entries[1][0]
    }

    pub fn to_mat2(&self) -> Mat2 {
        Mat2::from_real(
            self.entries[0][0],
            self.entries[0][1],
            self.entries[1][0],
            self.entries[1][1],
        )
    }
}

/// One row of a zero-width convergence study: deviation of the regularized
/// junction from the pure flux junction, plus the empirical convergence
/// order estimated from the previous row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub width: f64,
    pub deviation: f64,
    pub order: Option<f64>,
}

fn mat_add(a: [[f64; 2]; 2], b: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
    [
        [a[0][0] + b[0][0], a[0][1] + b[0][1]],
        [a[1][0] + b[1][0], a[1][1] + b[1][1]],
    ]
}

fn mat_scale(a: [[f64; 2]; 2], s: f64) -> [[f64; 2]; 2] {
    [[a[0][0] * s, a[0][1] * s], [a[1][0] * s, a[1][1] * s]]
}

// right-hand side of U' = A(x) U with A = [[0, 1], [q, 0]]
fn rhs(q: f64, u: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
    [[u[1][0], u[1][1]], [q * u[0][0], q * u[0][1]]]
}

/// Integrate the strip equation across `[0, width]` with `steps` fixed
/// Runge-Kutta steps and return the transfer matrix.
pub fn strip_transfer(p: &StripProblem, steps: usize) -> Result<TransferMatrix, Error> {
    if steps < MIN_STEPS {
        return Err(Error::Resolution(format!(
            "at least {MIN_STEPS} steps required, got {steps}"
        )));
    }
    let h = p.width / steps as f64;
    let step_scale = h * p.epsilon.sqrt();
    if step_scale > STEP_SCALE_LIMIT {
        return Err(Error::Resolution(format!(
            "h*sqrt(epsilon) = {step_scale:.3e} exceeds {STEP_SCALE_LIMIT}"
        )));
    }
    let q = |x: f64| 4.0 * (p.alpha * x) * (p.alpha * x) - p.epsilon;
    let mut u = [[1.0, 0.0], [0.0, 1.0]];
    for j in 0..steps {
        let x0 = j as f64 * h;
        let xm = x0 + 0.5 * h;
        let x1 = x0 + h;
        let k1 = rhs(q(x0), u);
        let k2 = rhs(q(xm), mat_add(u, mat_scale(k1, 0.5 * h)));
        let k3 = rhs(q(xm), mat_add(u, mat_scale(k2, 0.5 * h)));
        let k4 = rhs(q(x1), mat_add(u, mat_scale(k3, h)));
        let increment = mat_add(mat_add(k1, k4), mat_scale(mat_add(k2, k3), 2.0));
        u = mat_add(u, mat_scale(increment, h / 6.0));
    }
    let t = TransferMatrix { entries: u };
    debug_assert!((t.det() - 1.0).abs() <= DET_TOL);
    Ok(t)
}

/// Closed-form transfer matrix of the free strip (`alpha = 0`):
/// `[[cos(κw), sin(κw)/κ], [-κ sin(κw), cos(κw)]]` with `κ = sqrt(ε)`.
pub fn free_propagation(epsilon: f64, width: f64) -> TransferMatrix {
    let kappa = epsilon.sqrt();
    let (s, c) = (kappa * width).sin_cos();
    TransferMatrix {
        entries: [[c, s / kappa], [-kappa * s, c]],
    }
}

/// Finite-width junction of the strip: the transfer matrix multiplied by the
/// gauge phase `exp(2πi α)` accumulated along the strip.
pub fn regularized_junction(p: &StripProblem, steps: usize) -> Result<JunctionMatrix, Error> {
    let transfer = strip_transfer(p, steps)?;
    let phase = Complex64::from_polar(1.0, TAU * p.alpha);
    // a real transfer matrix with unit determinant times a unit phase is
    // symplectic-unitary up to the integrator's determinant drift
    JunctionMatrix::validated(transfer.to_mat2().scale(phase), DET_TOL.max(1e-12))
}

/// Deviations of the regularized junction from the zero-width flux junction
/// over a strictly descending list of widths, with empirical convergence
/// orders from successive rows.
pub fn convergence_study(
    alpha: f64,
    epsilon: f64,
    widths: &[f64],
    steps: usize,
) -> Result<Vec<ConvergenceRow>, Error> {
    if widths.is_empty() {
        return Err(Error::InvalidParameter("width list is empty".into()));
    }
    if widths.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidParameter(
            "widths must be strictly descending".into(),
        ));
    }
    let phase = Complex64::from_polar(1.0, TAU * alpha);
    let target = Mat2::IDENTITY.scale(phase);
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(widths.len());
    for &width in widths {
        let junction = regularized_junction(&StripProblem::new(alpha, epsilon, width)?, steps)?;
        let deviation = (*junction.matrix() - target).max_norm();
        let order = rows.last().and_then(|prev| {
            if prev.deviation > 0.0 && deviation > 0.0 {
                Some((prev.deviation / deviation).ln() / (prev.width / width).ln())
            } else {
                None
            }
        });
        rows.push(ConvergenceRow {
            width,
            deviation,
            order,
        });
    }
    Ok(rows)
}
