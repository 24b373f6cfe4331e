//! Constructors for the canonical one-parameter junction families, the
//! general chart over the symplectic-unitary group, their generators at the
//! identity, and the flux form of the gauge-family parameter.
//!
//! The four canonical families are
//!
//! | family        | matrix                                  | physics                 |
//! |---------------|-----------------------------------------|-------------------------|
//! | `delta`       | `[[1,0],[a,1]]`                         | delta potential         |
//! | `delta-prime` | `[[1,-a],[0,1]]`                        | mass jump               |
//! | `flux`        | `exp(2πi a)·I`                          | localized magnetic flux |
//! | `delta-one`   | `[[(2+a)/(2-a),0],[0,(2-a)/(2+a)]]`     | mass jump + quantized flux |
//!
//! Canonical families are stored symbolically (tag plus parameter) and
//! lowered to matrices on demand, so exact composition laws can be tested
//! against matrix products.

use crate::error::Error;
use crate::junction::{scaled_symplectic_tol, JunctionMatrix};
use crate::mat2::Mat2;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Tags for the four canonical one-parameter families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    DeltaPotential,
    DeltaPrime,
    MagneticFlux,
    DeltaOne,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::DeltaPotential,
        FamilyKind::DeltaPrime,
        FamilyKind::MagneticFlux,
        FamilyKind::DeltaOne,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::DeltaPotential => "delta",
            FamilyKind::DeltaPrime => "delta-prime",
            FamilyKind::MagneticFlux => "flux",
            FamilyKind::DeltaOne => "delta-one",
        }
    }
}

/// A canonical family together with its parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Canonical {
    /// Continuous wave function, derivative jump proportional to the value.
    DeltaPotential { strength: f64 },
    /// Continuous derivative, value jump proportional to the derivative.
    DeltaPrime { strength: f64 },
    /// Both value and derivative multiplied by the phase `exp(2πi·flux)`;
    /// `flux` is the enclosed flux in units of the flux quantum.
    MagneticFlux { flux: f64 },
    /// Value scaled by `c = (2+strength)/(2-strength)` and derivative by
    /// `1/c`; excluded at `strength = ±2` where the two half-lines decouple.
    DeltaOne { strength: f64 },
}

impl Canonical {
    pub fn kind(&self) -> FamilyKind {
        match self {
            Canonical::DeltaPotential { .. } => FamilyKind::DeltaPotential,
            Canonical::DeltaPrime { .. } => FamilyKind::DeltaPrime,
            Canonical::MagneticFlux { .. } => FamilyKind::MagneticFlux,
            Canonical::DeltaOne { .. } => FamilyKind::DeltaOne,
        }
    }

    pub fn parameter(&self) -> f64 {
        match self {
            Canonical::DeltaPotential { strength }
            | Canonical::DeltaPrime { strength }
            | Canonical::DeltaOne { strength } => *strength,
            Canonical::MagneticFlux { flux } => *flux,
        }
    }

    pub fn with_parameter(kind: FamilyKind, value: f64) -> Canonical {
        match kind {
            FamilyKind::DeltaPotential => Canonical::DeltaPotential { strength: value },
            FamilyKind::DeltaPrime => Canonical::DeltaPrime { strength: value },
            FamilyKind::MagneticFlux => Canonical::MagneticFlux { flux: value },
            FamilyKind::DeltaOne => Canonical::DeltaOne { strength: value },
        }
    }

    /// Raw matrix of this family without validation.
    pub fn matrix(&self) -> Result<Mat2, Error> {
        let p = self.parameter();
        if !p.is_finite() {
            return Err(Error::NonFinite("family parameter"));
        }
        Ok(match self {
            Canonical::DeltaPotential { strength } => Mat2::from_real(1.0, 0.0, *strength, 1.0),
            Canonical::DeltaPrime { strength } => Mat2::from_real(1.0, -strength, 0.0, 1.0),
            Canonical::MagneticFlux { flux } => {
                // only the fractional flux reaches the matrix; the integer
                // winding stays retrievable through split_flux
                let fractional = split_flux(*flux).fractional;
                Mat2::IDENTITY.scale(Complex64::from_polar(1.0, TAU * fractional))
            }
            Canonical::DeltaOne { strength } => {
                if *strength == 2.0 || *strength == -2.0 {
                    return Err(Error::InvalidParameter(
                        "delta-one strength must differ from +/-2 (half-lines decouple)".into(),
                    ));
                }
                Mat2::from_real(
                    (2.0 + strength) / (2.0 - strength),
                    0.0,
                    0.0,
                    (2.0 - strength) / (2.0 + strength),
                )
            }
        })
    }

    /// Validated junction matrix of this family.
    pub fn junction(&self) -> Result<JunctionMatrix, Error> {
        let m = self.matrix()?;
        JunctionMatrix::validated(m, scaled_symplectic_tol(&m))
    }
}

/// Any of the supported ways to write down an extension: a canonical
/// family, the chart over the group, its `y -> infinity` limit, or a raw
/// validated matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtensionFamily {
    Canonical(Canonical),
    /// `z·[[1, u],[x, y·u]]` with `u = 1/((y-x)|z|^2)`; requires `x != y`
    /// and `z != 0`. Covers every junction whose upper-left entry is
    /// nonzero and whose derivative coupling is nonzero.
    Chart {
        x: f64,
        y: f64,
        z: Complex64,
    },
    /// Limit of the chart as `y -> infinity`: `z·[[1, 0],[x, 1/|z|^2]]`.
    /// This is where the delta-potential and flux families live.
    ChartYInfinite {
        x: f64,
        z: Complex64,
    },
    Raw(JunctionMatrix),
}

impl From<Canonical> for ExtensionFamily {
    fn from(c: Canonical) -> Self {
        ExtensionFamily::Canonical(c)
    }
}

impl ExtensionFamily {
    /// Lower the family to a validated junction matrix.
    pub fn junction(&self) -> Result<JunctionMatrix, Error> {
        let m = match self {
            ExtensionFamily::Canonical(c) => return c.junction(),
            ExtensionFamily::Raw(j) => return Ok(*j),
            ExtensionFamily::Chart { x, y, z } => {
                if !(x.is_finite() && y.is_finite() && z.is_finite()) {
                    return Err(Error::NonFinite("chart parameters"));
                }
                if x == y {
                    return Err(Error::InvalidParameter("chart requires x != y".into()));
                }
                if z.norm_sqr() == 0.0 {
                    return Err(Error::InvalidParameter("chart requires z != 0".into()));
                }
                let u = 1.0 / ((y - x) * z.norm_sqr());
                if !u.is_finite() {
                    return Err(Error::InvalidParameter(
                        "chart coupling 1/((y-x)|z|^2) overflows".into(),
                    ));
                }
                Mat2::new(*z, z * u, z * x, z * (y * u))
            }
            ExtensionFamily::ChartYInfinite { x, z } => {
                if !(x.is_finite() && z.is_finite()) {
                    return Err(Error::NonFinite("chart parameters"));
                }
                if z.norm_sqr() == 0.0 {
                    return Err(Error::InvalidParameter("chart requires z != 0".into()));
                }
                Mat2::new(*z, Complex64::new(0.0, 0.0), z * *x, z / z.norm_sqr())
            }
        };
        JunctionMatrix::validated(m, scaled_symplectic_tol(&m))
    }
}

/// A flux value split into its fractional part in `[0, 1)` and the integer
/// winding. The junction matrix only sees the fractional part; the integer
/// part is the quantized flux, which is retained because it stays physically
/// meaningful once spin enters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxDecomposition {
    pub fractional: f64,
    pub winding: i64,
}

/// Normalize an arbitrary flux into `[0, 1)` plus an integer winding.
pub fn split_flux(flux: f64) -> FluxDecomposition {
    let winding = flux.floor();
    FluxDecomposition {
        fractional: flux - winding,
        winding: winding as i64,
    }
}

/// Flux `α ∈ [0, 1)` of the gauge-family strength `s`, defined by
/// `exp(2πi α) = (2 + i s)/(2 - i s)`. The Möbius image has unit modulus for
/// every real `s`, so the flux is always well defined; `s -> -s` maps
/// `α -> 1 - α (mod 1)`, the time-reversal image.
pub fn flux_of_gauge_strength(strength: f64) -> f64 {
    // arg((2+is)/(2-is)) = 2·atan2(s, 2)
    (strength.atan2(2.0) / std::f64::consts::PI).rem_euclid(1.0)
}

/// Derivative of the family matrix with respect to its parameter at the
/// group identity, evaluated analytically.
pub fn generator(kind: FamilyKind) -> Mat2 {
    match kind {
        FamilyKind::DeltaPotential => Mat2::from_real(0.0, 0.0, 1.0, 0.0),
        FamilyKind::DeltaPrime => Mat2::from_real(0.0, -1.0, 0.0, 0.0),
        FamilyKind::MagneticFlux => Mat2::IDENTITY.scale(Complex64::new(0.0, TAU)),
        FamilyKind::DeltaOne => Mat2::from_real(1.0, 0.0, 0.0, -1.0),
    }
}

/// Gram matrix `G[i][j] = Re Tr(g_i · g_j†)` of the four generators in the
/// order of [`FamilyKind::ALL`]. The generators are orthogonal, so the
/// off-diagonal entries vanish.
pub fn generator_gram() -> [[f64; 4]; 4] {
    let gens = FamilyKind::ALL.map(generator);
    let mut gram = [[0.0; 4]; 4];
    for (i, gi) in gens.iter().enumerate() {
        for (j, gj) in gens.iter().enumerate() {
            gram[i][j] = (*gi * gj.adjoint()).trace().re;
        }
    }
    gram
}
