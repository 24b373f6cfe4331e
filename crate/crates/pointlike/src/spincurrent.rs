//! Spin-current continuity across a junction and the resulting
//! magnetic/potential classification.
//!
//! For a two-component Pauli spinor the junction acts diagonally in spin
//! space. Beyond the probability current, the spin terms of the current
//! involve the full sesquilinear combination `conj(ψ)·ψ'` of each component
//! rather than only its imaginary part, so a junction supports a spinful
//! point interaction exactly when it preserves that bilinear for all
//! boundary data. Algebraically this singles out the diagonal matrices
//! `diag(a, 1/conj(a))`: the flux and scaling families pass, the delta and
//! delta-prime families fail.

use crate::error::Error;
use crate::extensions::Canonical;
use crate::junction::{BoundaryData, JunctionMatrix};
use crate::mat2::Mat2;
use crate::scattering::{time_reversal_deviation, TIME_REVERSAL_TOL};
use num_complex::Complex64;

/// Tolerance on the algebraic pairing-preservation conditions.
pub const PAIRING_TOL: f64 = 1e-12;

// entry-level tolerance for recognizing the canonical shapes
const STRUCTURAL_TOL: f64 = 1e-9;

/// Boundary data of both spin components on one side of the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorBoundaryData {
    pub up: BoundaryData,
    pub down: BoundaryData,
}

/// Jumps of the spin-term derivatives across the junction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinTermJumps {
    /// Jump of `∂x(|ψ↑|² - |ψ↓|²)`, the σz bilinear entering the
    /// y-component of the spin current. Real by construction.
    pub y_component: f64,
    /// Jump of `∂x(conj(ψ↑)ψ↓ - conj(ψ↓)ψ↑)`, the σy bilinear entering the
    /// z-component. Purely imaginary for finite data.
    pub z_component: Complex64,
}

/// Classification labels of the junctions, one per canonical stratum plus
/// the free (identity) junction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtensionClass {
    Free,
    PurePotential,
    MassJump,
    Magnetic,
    MagneticMassJump,
}

impl ExtensionClass {
    pub fn name(&self) -> &'static str {
        match self {
            ExtensionClass::Free => "free",
            ExtensionClass::PurePotential => "pure-potential",
            ExtensionClass::MassJump => "mass-jump",
            ExtensionClass::Magnetic => "magnetic",
            ExtensionClass::MagneticMassJump => "magnetic-mass-jump",
        }
    }
}

/// Outcome of [`classify`]: the symmetry booleans together with the label
/// they support.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassificationReport {
    /// Echo of the classified matrix.
    pub matrix: Mat2,
    pub time_reversal_deviation: f64,
    pub time_reversal_ok: bool,
    pub pairing_ok: bool,
    pub label: ExtensionClass,
}

/// True when the junction preserves `conj(ψ)·ψ'` for every boundary datum,
/// i.e. when the spin terms of the Pauli current stay continuous.
///
/// Writing the matrix as `[[a, b], [c, d]]`, preservation for all data is
/// equivalent to `conj(a)c = 0`, `conj(b)d = 0`, `conj(b)c = 0` and
/// `conj(a)d = 1`.
pub fn preserves_pairing(junction: &JunctionMatrix) -> bool {
    let m = junction.matrix();
    (m.m11.conj() * m.m21).norm() <= PAIRING_TOL
        && (m.m12.conj() * m.m22).norm() <= PAIRING_TOL
        && (m.m12.conj() * m.m21).norm() <= PAIRING_TOL
        && (m.m11.conj() * m.m22 - Complex64::new(1.0, 0.0)).norm() <= PAIRING_TOL
}

// d/dx |ψ|² expressed through boundary values only
fn density_slope(g: &BoundaryData) -> f64 {
    2.0 * (g.psi().conj() * g.dpsi()).re
}

// σy bilinear (conj(ψ↑)ψ↓ - conj(ψ↓)ψ↑)' from boundary values
fn cross_slope(up: &BoundaryData, down: &BoundaryData) -> Complex64 {
    up.dpsi().conj() * down.psi() + up.psi().conj() * down.dpsi()
        - down.dpsi().conj() * up.psi()
        - down.psi().conj() * up.dpsi()
}

/// Jumps of the spin-term derivatives when the junction is applied to both
/// spinor components. Both jumps vanish whenever
/// [`preserves_pairing`] holds.
pub fn spin_term_jumps(junction: &JunctionMatrix, s: &SpinorBoundaryData) -> SpinTermJumps {
    let up_out = junction.apply(&s.up);
    let down_out = junction.apply(&s.down);
    let y_plus = density_slope(&up_out) - density_slope(&down_out);
    let y_minus = density_slope(&s.up) - density_slope(&s.down);
    let z_plus = cross_slope(&up_out, &down_out);
    let z_minus = cross_slope(&s.up, &s.down);
    SpinTermJumps {
        y_component: y_plus - y_minus,
        z_component: z_plus - z_minus,
    }
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= STRUCTURAL_TOL
}

/// Classify a junction into the canonical strata.
///
/// Decision table, combining the structural shape with the time-reversal
/// test on `k_grid` and the pairing test:
///
/// * identity -> `Free` (every test passes trivially);
/// * scalar phase `z·I`, `|z| = 1`, `z != 1` -> `Magnetic` (pairing holds;
///   time reversal fails except at half flux, where the spinless S-matrix
///   is blind to the field);
/// * lower triangular with unit diagonal -> `PurePotential` (time reversal
///   holds, pairing fails);
/// * upper triangular with unit diagonal -> `MassJump` (same booleans);
/// * real diagonal `diag(c, 1/c)`, `c != ±1` -> `MagneticMassJump` (both
///   hold).
///
/// Matrices outside these shapes mix the strata and are reported as
/// [`Error::Unclassified`] instead of being forced into a label, as are
/// matrices whose booleans contradict the shape.
pub fn classify(junction: &JunctionMatrix, k_grid: &[f64]) -> Result<ClassificationReport, Error> {
    let deviation = time_reversal_deviation(junction, k_grid)?;
    let time_reversal_ok = deviation <= TIME_REVERSAL_TOL;
    let pairing_ok = preserves_pairing(junction);
    let m = *junction.matrix();
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);

    let off_diagonal_vanishes = close(m.m12, zero) && close(m.m21, zero);
    let label = if off_diagonal_vanishes && close(m.m11, one) && close(m.m22, one) {
        ExtensionClass::Free
    } else if off_diagonal_vanishes
        && close(m.m11, m.m22)
        && (m.m11.norm() - 1.0).abs() <= STRUCTURAL_TOL
    {
        ExtensionClass::Magnetic
    } else if close(m.m12, zero) && close(m.m11, one) && close(m.m22, one) {
        ExtensionClass::PurePotential
    } else if close(m.m21, zero) && close(m.m11, one) && close(m.m22, one) {
        ExtensionClass::MassJump
    } else if off_diagonal_vanishes
        && m.m11.im.abs() <= STRUCTURAL_TOL
        && m.m22.im.abs() <= STRUCTURAL_TOL
    {
        ExtensionClass::MagneticMassJump
    } else {
        return Err(Error::Unclassified {
            time_reversal_deviation: deviation,
            pairing_ok,
        });
    };

    let consistent = match label {
        ExtensionClass::Free | ExtensionClass::MagneticMassJump => time_reversal_ok && pairing_ok,
        ExtensionClass::PurePotential | ExtensionClass::MassJump => time_reversal_ok && !pairing_ok,
        ExtensionClass::Magnetic => pairing_ok,
    };
    if !consistent {
        return Err(Error::Unclassified {
            time_reversal_deviation: deviation,
            pairing_ok,
        });
    }

    Ok(ClassificationReport {
        matrix: m,
        time_reversal_deviation: deviation,
        time_reversal_ok,
        pairing_ok,
        label,
    })
}

/// One row of the reference classification table, carrying the static data
/// together with the live test results.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub family: &'static str,
    pub matrix_form: &'static str,
    pub group: &'static str,
    pub label: &'static str,
    pub class: ExtensionClass,
    pub representative: Canonical,
    pub pairing_ok: bool,
    pub time_reversal_ok: bool,
}

/// The classification table of the four canonical families, recomputed live
/// at representative parameters and checked against the static expectation.
/// A disagreement is a regression and surfaces as [`Error::TableMismatch`].
pub fn classification_table(k_grid: &[f64]) -> Result<Vec<TableRow>, Error> {
    let entries: [(
        &'static str,
        &'static str,
        &'static str,
        ExtensionClass,
        Canonical,
    ); 4] = [
        (
            "delta",
            "[[1,0],[a,1]]",
            "(1,0)",
            ExtensionClass::PurePotential,
            Canonical::DeltaPotential { strength: 2.0 },
        ),
        (
            "delta-prime",
            "[[1,-a],[0,1]]",
            "R+",
            ExtensionClass::MassJump,
            Canonical::DeltaPrime { strength: 2.0 },
        ),
        (
            "flux",
            "exp(2*pi*i*a)*[[1,0],[0,1]]",
            "U(1)",
            ExtensionClass::Magnetic,
            Canonical::MagneticFlux { flux: 0.3 },
        ),
        (
            "delta-one",
            "[[(2+a)/(2-a),0],[0,(2-a)/(2+a)]]",
            "R+ x Z",
            ExtensionClass::MagneticMassJump,
            Canonical::DeltaOne { strength: 0.5 },
        ),
    ];
    let labels = [
        "δ-potential",
        "mass jump",
        "magnetic",
        "magnetic & mass jump",
    ];

    let mut rows = Vec::with_capacity(entries.len());
    for ((family, matrix_form, group, class, representative), label) in
        entries.into_iter().zip(labels)
    {
        let junction = representative.junction()?;
        let report = classify(&junction, k_grid)?;
        if report.label != class {
            return Err(Error::TableMismatch {
                family,
                expected: class.name(),
                actual: report.label.name(),
            });
        }
        rows.push(TableRow {
            family,
            matrix_form,
            group,
            label,
            class,
            representative,
            pairing_ok: report.pairing_ok,
            time_reversal_ok: report.time_reversal_ok,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::ExtensionFamily;
    use crate::scattering::DEFAULT_K_GRID;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn junction_of(family: Canonical) -> JunctionMatrix {
        family.junction().unwrap()
    }

    fn random_spinor(rng: &mut StdRng) -> SpinorBoundaryData {
        let mut draw = |_: ()| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        SpinorBoundaryData {
            up: BoundaryData::new(draw(()), draw(())).unwrap(),
            down: BoundaryData::new(draw(()), draw(())).unwrap(),
        }
    }

    #[test]
    fn pairing_follows_the_family() {
        assert!(preserves_pairing(&junction_of(Canonical::MagneticFlux {
            flux: 0.3
        })));
        assert!(preserves_pairing(&junction_of(Canonical::DeltaOne {
            strength: 1.0
        })));
        assert!(!preserves_pairing(&junction_of(
            Canonical::DeltaPotential { strength: 2.0 }
        )));
        assert!(!preserves_pairing(&junction_of(Canonical::DeltaPrime {
            strength: 2.0
        })));
    }

    #[test]
    fn algebraic_pairing_agrees_with_sampled_boundary_data() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for kind in crate::extensions::FamilyKind::ALL {
            for _ in 0..100 {
                let value = match kind {
                    crate::extensions::FamilyKind::MagneticFlux => rng.gen_range(0.05..0.95),
                    _ => {
                        let magnitude = rng.gen_range(0.5..20.0);
                        if rng.gen_bool(0.5) {
                            magnitude
                        } else {
                            -magnitude
                        }
                    }
                };
                let family = Canonical::with_parameter(kind, value);
                if matches!(family, Canonical::DeltaOne { strength } if (strength.abs() - 2.0).abs() < 1e-3)
                {
                    continue;
                }
                let j = junction_of(family);
                let algebraic = preserves_pairing(&j);
                // independent route: sample the bilinear on 100 random data
                let mut worst = 0.0f64;
                for _ in 0..100 {
                    let s = random_spinor(&mut rng);
                    let out = j.apply(&s.up);
                    let before = s.up.psi().conj() * s.up.dpsi();
                    let after = out.psi().conj() * out.dpsi();
                    worst = worst.max((after - before).norm());
                }
                let scale = 1.0 + j.matrix().max_norm().powi(2);
                let sampled = worst <= 1e-9 * scale;
                assert_eq!(algebraic, sampled, "{family:?}: worst = {worst}");
            }
        }
    }

    #[test]
    fn jumps_vanish_for_the_identity_and_the_flux() {
        let mut rng = StdRng::seed_from_u64(7);
        let id = JunctionMatrix::validated_default(Mat2::IDENTITY).unwrap();
        let flux = junction_of(Canonical::MagneticFlux { flux: 0.3 });
        for _ in 0..50 {
            let s = random_spinor(&mut rng);
            let j = spin_term_jumps(&id, &s);
            assert_eq!(j.y_component, 0.0);
            assert_eq!(j.z_component, c(0.0, 0.0));
            let j = spin_term_jumps(&flux, &s);
            assert!(j.y_component.abs() <= 1e-12);
            assert!(j.z_component.norm() <= 1e-12);
        }
    }

    #[test]
    fn delta_junction_breaks_the_spin_terms() {
        let j = junction_of(Canonical::DeltaPotential { strength: 2.0 });
        let s = SpinorBoundaryData {
            up: BoundaryData::new(c(1.0, 0.0), c(0.0, 1.0)).unwrap(),
            down: BoundaryData::new(c(0.0, 0.0), c(0.0, 0.0)).unwrap(),
        };
        let jumps = spin_term_jumps(&j, &s);
        assert!((jumps.y_component - 4.0).abs() < 1e-14);
        assert_eq!(jumps.z_component, c(0.0, 0.0));
    }

    #[test]
    fn z_jump_is_purely_imaginary_and_nonzero_for_delta() {
        let j = junction_of(Canonical::DeltaPotential { strength: 2.0 });
        let s = SpinorBoundaryData {
            up: BoundaryData::new(c(1.0, 0.0), c(0.0, 1.0)).unwrap(),
            down: BoundaryData::new(c(0.0, 1.0), c(1.0, 0.0)).unwrap(),
        };
        let jumps = spin_term_jumps(&j, &s);
        assert!(jumps.z_component.re.abs() < 1e-14);
        assert!(jumps.z_component.norm() > 0.1);
    }

    #[test]
    fn canonical_families_classify_per_the_table() {
        let cases = [
            (
                Canonical::DeltaPotential { strength: 2.0 },
                ExtensionClass::PurePotential,
            ),
            (
                Canonical::DeltaPrime { strength: 2.0 },
                ExtensionClass::MassJump,
            ),
            (
                Canonical::MagneticFlux { flux: 0.3 },
                ExtensionClass::Magnetic,
            ),
            (
                Canonical::DeltaOne { strength: 0.5 },
                ExtensionClass::MagneticMassJump,
            ),
        ];
        for (family, expected) in cases {
            let report = classify(&junction_of(family), &DEFAULT_K_GRID).unwrap();
            assert_eq!(report.label, expected, "{family:?}");
        }
    }

    #[test]
    fn classification_holds_at_random_general_position_parameters() {
        let mut rng = StdRng::seed_from_u64(33);
        for _ in 0..25 {
            let strength = {
                let magnitude: f64 = rng.gen_range(0.2..10.0);
                if rng.gen_bool(0.5) {
                    magnitude
                } else {
                    -magnitude
                }
            };
            let cases = [
                (
                    Canonical::DeltaPotential { strength },
                    ExtensionClass::PurePotential,
                ),
                (Canonical::DeltaPrime { strength }, ExtensionClass::MassJump),
                (
                    Canonical::MagneticFlux {
                        flux: rng.gen_range(0.01..0.99),
                    },
                    ExtensionClass::Magnetic,
                ),
            ];
            for (family, expected) in cases {
                let report = classify(&junction_of(family), &DEFAULT_K_GRID).unwrap();
                assert_eq!(report.label, expected, "{family:?}");
            }
            let scaling = loop {
                let s: f64 = rng.gen_range(-10.0..10.0);
                if s.abs() > 0.05 && (s.abs() - 2.0).abs() > 0.05 {
                    break Canonical::DeltaOne { strength: s };
                }
            };
            let report = classify(&junction_of(scaling), &DEFAULT_K_GRID).unwrap();
            assert_eq!(
                report.label,
                ExtensionClass::MagneticMassJump,
                "{scaling:?}"
            );
        }
    }

    #[test]
    fn half_flux_still_counts_as_magnetic() {
        let report = classify(
            &junction_of(Canonical::MagneticFlux { flux: 0.5 }),
            &DEFAULT_K_GRID,
        )
        .unwrap();
        assert_eq!(report.label, ExtensionClass::Magnetic);
        // the spinless S-matrix is blind to half flux
        assert!(report.time_reversal_ok);
        assert!(report.pairing_ok);
    }

    #[test]
    fn identity_is_free_and_mixed_matrices_are_unclassified() {
        let id = JunctionMatrix::validated_default(Mat2::IDENTITY).unwrap();
        let report = classify(&id, &DEFAULT_K_GRID).unwrap();
        assert_eq!(report.label, ExtensionClass::Free);
        assert!(report.time_reversal_ok && report.pairing_ok);

        // generic chart point sits in none of the canonical strata
        let mixed = ExtensionFamily::Chart {
            x: 1.0,
            y: 2.0,
            z: c(1.0, 0.0),
        }
        .junction()
        .unwrap();
        assert!(matches!(
            classify(&mixed, &DEFAULT_K_GRID),
            Err(Error::Unclassified { .. })
        ));

        // phase times delta mixes flux and potential strata
        let phase = Complex64::from_polar(1.0, 0.7);
        let m = Mat2::from_real(1.0, 0.0, 2.0, 1.0).scale(phase);
        let j = JunctionMatrix::validated_default(m).unwrap();
        assert!(matches!(
            classify(&j, &DEFAULT_K_GRID),
            Err(Error::Unclassified { .. })
        ));
    }

    #[test]
    fn probability_current_versus_full_pairing() {
        // families I and II conserve the current but not the bilinear;
        // family IV conserves both
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..50 {
            let g = BoundaryData::new(
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            )
            .unwrap();
            for family in [
                Canonical::DeltaPotential { strength: 2.0 },
                Canonical::DeltaPrime { strength: 2.0 },
                Canonical::DeltaOne { strength: 0.5 },
            ] {
                let j = junction_of(family);
                let out = j.apply(&g);
                assert!((out.current() - g.current()).abs() <= 1e-12);
                let before = g.psi().conj() * g.dpsi();
                let after = out.psi().conj() * out.dpsi();
                let preserved = (after - before).norm() <= 1e-9;
                assert_eq!(preserved, preserves_pairing(&j), "{family:?}");
            }
        }
    }

    #[test]
    fn reference_table_is_reproduced_live() {
        let rows = classification_table(&DEFAULT_K_GRID).unwrap();
        assert_eq!(rows.len(), 4);
        let classes: Vec<_> = rows.iter().map(|r| r.class).collect();
        assert_eq!(
            classes,
            vec![
                ExtensionClass::PurePotential,
                ExtensionClass::MassJump,
                ExtensionClass::Magnetic,
                ExtensionClass::MagneticMassJump,
            ]
        );
        let pairings: Vec<_> = rows.iter().map(|r| r.pairing_ok).collect();
        assert_eq!(pairings, vec![false, false, true, true]);
        assert_eq!(rows[0].group, "(1,0)");
        assert_eq!(rows[2].group, "U(1)");
        assert_eq!(rows[3].label, "magnetic & mass jump");
    }
}
