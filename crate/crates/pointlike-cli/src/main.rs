//! Command-line front end for the pointlike junction toolkit. Every
//! subcommand is deterministic and writes machine-readable JSON or CSV to
//! standard output or to `--output`.
//!
//! Exit codes: 0 success, 2 usage error, 3 domain error (invalid physics
//! parameters, non-symplectic matrices), 4 internal invariant failure.

use clap::{Parser, Subcommand, ValueEnum};
use pointlike::{
    classification_table, classify, closed_form_smatrix, convergence_study, smatrix, Canonical,
    Complex64, FamilyKind, JunctionMatrix, MassJump, Mat2, ScatteringMatrix, DEFAULT_K_GRID,
};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "pointlike",
    version,
    about = "Scattering and classification of point-like junctions on the 1D Schrödinger line"
)]
struct Cli {
    /// Output format; scalar commands default to json, sweeps to csv.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, ValueEnum)]
enum FamilyArg {
    /// Delta potential: continuous value, derivative jump.
    Delta,
    /// Delta-prime: continuous derivative, value jump.
    DeltaPrime,
    /// Localized magnetic flux in units of the flux quantum.
    Flux,
    /// Scaling junction (value scaled by c, derivative by 1/c).
    DeltaOne,
    /// Raw junction matrix supplied through --matrix.
    Raw,
}

#[derive(Subcommand)]
enum Command {
    /// Scattering matrix of one junction at one wavenumber.
    Smatrix {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Family parameter (strength or flux); required unless raw.
        #[arg(long, allow_hyphen_values = true)]
        param: Option<f64>,
        #[arg(long)]
        k: f64,
        /// Raw junction matrix: 8 comma-separated reals, row-major re,im pairs.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        matrix: Option<Vec<f64>>,
    },
    /// Reflection/transmission sweep over a linear wavenumber grid.
    Sweep {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, allow_hyphen_values = true)]
        param: Option<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        matrix: Option<Vec<f64>>,
        #[arg(long)]
        kmin: f64,
        #[arg(long)]
        kmax: f64,
        #[arg(long)]
        steps: usize,
    },
    /// Zero-width convergence of the regularized magnetic-strip junction.
    Regularize {
        /// Flux through the strip in flux quanta.
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        /// Dimensionless energy inside the strip.
        #[arg(long)]
        epsilon: f64,
        /// Strictly descending strip widths, comma separated.
        #[arg(long, value_delimiter = ',')]
        widths: Vec<f64>,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
    },
    /// Mass-jump correspondence for one mass ratio.
    Massjump {
        /// Mass ratio, positive and different from 1.
        #[arg(long)]
        mu: f64,
    },
    /// Classify a junction into the canonical strata.
    Classify {
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long, allow_hyphen_values = true)]
        param: Option<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        matrix: Option<Vec<f64>>,
    },
    /// Reference classification table of the four canonical families,
    /// recomputed live.
    Table,
}

enum Failure {
    Usage(String),
    Domain(pointlike::Error),
    Internal(pointlike::Error),
    Io(std::io::Error),
}

impl From<pointlike::Error> for Failure {
    fn from(e: pointlike::Error) -> Self {
        match e {
            pointlike::Error::TableMismatch { .. } => Failure::Internal(e),
            other => Failure::Domain(other),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Internal(_) => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => format!("usage error: {m}"),
            Failure::Domain(e) => format!("error: {e}"),
            Failure::Internal(e) => format!("internal error: {e}"),
            Failure::Io(e) => format!("io error: {e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    match run(cli) {
        Ok(text) => {
            let result = match output {
                Some(path) => std::fs::write(path, text).map_err(Failure::Io),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match result {
                Ok(()) => ExitCode::SUCCESS,
                Err(failure) => {
                    eprintln!("{}", failure.message());
                    ExitCode::from(failure.exit_code())
                }
            }
        }
        Err(failure) => {
            eprintln!("{}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Smatrix {
            family,
            param,
            k,
            matrix,
        } => {
            let (junction, canonical) = resolve_junction(family, param, matrix.as_deref())?;
            let format = cli.format.unwrap_or(Format::Json);
            cmd_smatrix(&junction, canonical, k, format)
        }
        Command::Sweep {
            family,
            param,
            matrix,
            kmin,
            kmax,
            steps,
        } => {
            let (junction, _) = resolve_junction(family, param, matrix.as_deref())?;
            let format = cli.format.unwrap_or(Format::Csv);
            cmd_sweep(&junction, kmin, kmax, steps, format)
        }
        Command::Regularize {
            alpha,
            epsilon,
            widths,
            steps,
        } => cmd_regularize(
            alpha,
            epsilon,
            &widths,
            steps,
            cli.format.unwrap_or(Format::Csv),
        ),
        Command::Massjump { mu } => cmd_massjump(mu, cli.format.unwrap_or(Format::Json)),
        Command::Classify {
            family,
            param,
            matrix,
        } => cmd_classify(
            family,
            param,
            matrix.as_deref(),
            cli.format.unwrap_or(Format::Json),
        ),
        Command::Table => cmd_table(cli.format.unwrap_or(Format::Json)),
    }
}

fn parse_matrix(values: &[f64]) -> Result<Mat2, Failure> {
    if values.len() != 8 {
        return Err(Failure::Usage(format!(
            "--matrix needs 8 comma-separated reals (row-major re,im pairs), got {}",
            values.len()
        )));
    }
    Ok(Mat2::new(
        Complex64::new(values[0], values[1]),
        Complex64::new(values[2], values[3]),
        Complex64::new(values[4], values[5]),
        Complex64::new(values[6], values[7]),
    ))
}

fn resolve_junction(
    family: FamilyArg,
    param: Option<f64>,
    matrix: Option<&[f64]>,
) -> Result<(JunctionMatrix, Option<Canonical>), Failure> {
    match family {
        FamilyArg::Raw => {
            if param.is_some() {
                return Err(Failure::Usage(
                    "--param is not valid together with --family raw".into(),
                ));
            }
            let values =
                matrix.ok_or_else(|| Failure::Usage("--family raw requires --matrix".into()))?;
            let junction = JunctionMatrix::validated_default(parse_matrix(values)?)?;
            Ok((junction, None))
        }
        named => {
            if matrix.is_some() {
                return Err(Failure::Usage(
                    "--matrix is only valid together with --family raw".into(),
                ));
            }
            let value = param
                .ok_or_else(|| Failure::Usage("--param is required for this family".into()))?;
            let kind = match named {
                FamilyArg::Delta => FamilyKind::DeltaPotential,
                FamilyArg::DeltaPrime => FamilyKind::DeltaPrime,
                FamilyArg::Flux => FamilyKind::MagneticFlux,
                FamilyArg::DeltaOne => FamilyKind::DeltaOne,
                FamilyArg::Raw => unreachable!(),
            };
            let canonical = Canonical::with_parameter(kind, value);
            Ok((canonical.junction()?, Some(canonical)))
        }
    }
}

#[derive(Serialize)]
struct ComplexOut {
    re: f64,
    im: f64,
}

impl From<Complex64> for ComplexOut {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

fn matrix_out(m: &Mat2) -> [[ComplexOut; 2]; 2] {
    [[m.m11.into(), m.m12.into()], [m.m21.into(), m.m22.into()]]
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let body =
        serde_json::to_string_pretty(value).map_err(|e| Failure::Io(std::io::Error::other(e)))?;
    Ok(format!("{body}\n"))
}

#[derive(Serialize)]
struct SmatrixOut {
    k: f64,
    #[serde(rename = "S")]
    s: [[ComplexOut; 2]; 2],
    #[serde(rename = "R")]
    reflection: f64,
    #[serde(rename = "T")]
    transmission: f64,
    unitarity_residual: f64,
    generic_vs_closed_residual: Option<f64>,
}

fn cmd_smatrix(
    junction: &JunctionMatrix,
    canonical: Option<Canonical>,
    k: f64,
    format: Format,
) -> Result<String, Failure> {
    let s = smatrix(junction, k)?;
    let closed_residual = match canonical {
        Some(family) => {
            let closed = closed_form_smatrix(&family, k)?;
            Some((*s.matrix() - *closed.matrix()).max_norm())
        }
        None => None,
    };
    let p = s.probabilities();
    match format {
        Format::Json => to_json(&SmatrixOut {
            k,
            s: matrix_out(s.matrix()),
            reflection: p.reflection,
            transmission: p.transmission,
            unitarity_residual: s.unitarity_residual(),
            generic_vs_closed_residual: closed_residual,
        }),
        Format::Csv => {
            let mut text = String::from(
                "k,A_plus_re,A_plus_im,B_plus_re,B_plus_im,B_minus_re,B_minus_im,A_minus_re,A_minus_im,R,T,unitarity_residual,generic_vs_closed_residual\n",
            );
            let closed = closed_residual.map_or(String::new(), |r| r.to_string());
            text.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                k,
                s.a_plus().re,
                s.a_plus().im,
                s.b_plus().re,
                s.b_plus().im,
                s.b_minus().re,
                s.b_minus().im,
                s.a_minus().re,
                s.a_minus().im,
                p.reflection,
                p.transmission,
                s.unitarity_residual(),
                closed,
            ));
            Ok(text)
        }
    }
}

#[derive(Serialize)]
struct SweepRow {
    k: f64,
    #[serde(rename = "R")]
    reflection: f64,
    #[serde(rename = "T")]
    transmission: f64,
    unitarity_residual: f64,
}

fn cmd_sweep(
    junction: &JunctionMatrix,
    kmin: f64,
    kmax: f64,
    steps: usize,
    format: Format,
) -> Result<String, Failure> {
    if !(kmin.is_finite() && kmax.is_finite()) || kmin <= 0.0 || kmax <= kmin {
        return Err(Failure::Usage(
            "sweep needs 0 < kmin < kmax with finite endpoints".into(),
        ));
    }
    if steps < 2 {
        return Err(Failure::Usage("sweep needs at least 2 steps".into()));
    }
    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let k = kmin + (kmax - kmin) * i as f64 / (steps - 1) as f64;
        let s: ScatteringMatrix = smatrix(junction, k)?;
        let p = s.probabilities();
        rows.push(SweepRow {
            k,
            reflection: p.reflection,
            transmission: p.transmission,
            unitarity_residual: s.unitarity_residual(),
        });
    }
    match format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut text = String::from("k,R,T,unitarity_residual\n");
            for row in rows {
                text.push_str(&format!(
                    "{},{},{},{}\n",
                    row.k, row.reflection, row.transmission, row.unitarity_residual
                ));
            }
            Ok(text)
        }
    }
}

#[derive(Serialize)]
struct RegularizeRow {
    width: f64,
    deviation: f64,
    empirical_order: Option<f64>,
}

fn cmd_regularize(
    alpha: f64,
    epsilon: f64,
    widths: &[f64],
    steps: usize,
    format: Format,
) -> Result<String, Failure> {
    let rows = convergence_study(alpha, epsilon, widths, steps)?;
    let rows: Vec<RegularizeRow> = rows
        .into_iter()
        .map(|r| RegularizeRow {
            width: r.width,
            deviation: r.deviation,
            empirical_order: r.order,
        })
        .collect();
    match format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut text = String::from("width,deviation,empirical_order\n");
            for row in rows {
                let order = row.empirical_order.map_or(String::new(), |p| p.to_string());
                text.push_str(&format!("{},{},{}\n", row.width, row.deviation, order));
            }
            Ok(text)
        }
    }
}

#[derive(Serialize)]
struct MassJumpOut {
    mu: f64,
    b: f64,
    #[serde(rename = "X2")]
    x2: f64,
    #[serde(rename = "M_massjump")]
    m_massjump: [[ComplexOut; 2]; 2],
    #[serde(rename = "M_rescaled")]
    m_rescaled: [[ComplexOut; 2]; 2],
    delta_one_match_residual: f64,
}

fn cmd_massjump(mu: f64, format: Format) -> Result<String, Failure> {
    let mj = MassJump::new(mu)?;
    let x2 = mj.delta_one_strength();
    let rescaled = mj.rescaled_junction()?;
    let equivalent = Canonical::DeltaOne { strength: x2 }.junction()?;
    let residual = (*equivalent.matrix() - *rescaled.matrix()).max_norm();
    match format {
        Format::Json => to_json(&MassJumpOut {
            mu,
            b: mj.boundary_parameter(),
            x2,
            m_massjump: matrix_out(&mj.junction()),
            m_rescaled: matrix_out(rescaled.matrix()),
            delta_one_match_residual: residual,
        }),
        Format::Csv => {
            let mut text = String::from("mu,b,X2,delta_one_match_residual\n");
            text.push_str(&format!(
                "{},{},{},{}\n",
                mu,
                mj.boundary_parameter(),
                x2,
                residual
            ));
            Ok(text)
        }
    }
}

#[derive(Serialize)]
struct ClassifyOut {
    family: Option<&'static str>,
    param: Option<f64>,
    matrix: [[ComplexOut; 2]; 2],
    time_reversal_deviation: f64,
    time_reversal_ok: bool,
    spin_pairing_ok: bool,
    label: &'static str,
}

fn cmd_classify(
    family: Option<FamilyArg>,
    param: Option<f64>,
    matrix: Option<&[f64]>,
    format: Format,
) -> Result<String, Failure> {
    let (junction, canonical) = match (family, matrix) {
        (Some(f), _) => resolve_junction(f, param, matrix)?,
        (None, Some(values)) => (
            JunctionMatrix::validated_default(parse_matrix(values)?)?,
            None,
        ),
        (None, None) => {
            return Err(Failure::Usage(
                "classify needs --family <name> --param <v> or --matrix <8 reals>".into(),
            ))
        }
    };
    let report = classify(&junction, &DEFAULT_K_GRID)?;
    let out = ClassifyOut {
        family: canonical.map(|c| c.kind().name()),
        param: canonical.map(|c| c.parameter()),
        matrix: matrix_out(&report.matrix),
        time_reversal_deviation: report.time_reversal_deviation,
        time_reversal_ok: report.time_reversal_ok,
        spin_pairing_ok: report.pairing_ok,
        label: report.label.name(),
    };
    match format {
        Format::Json => to_json(&out),
        Format::Csv => {
            let mut text = String::from(
                "family,param,time_reversal_deviation,time_reversal_ok,spin_pairing_ok,label\n",
            );
            text.push_str(&format!(
                "{},{},{},{},{},{}\n",
                out.family.unwrap_or(""),
                out.param.map_or(String::new(), |p| p.to_string()),
                out.time_reversal_deviation,
                out.time_reversal_ok,
                out.spin_pairing_ok,
                out.label
            ));
            Ok(text)
        }
    }
}

#[derive(Serialize)]
struct TableRowOut {
    family: &'static str,
    matrix: &'static str,
    group: &'static str,
    label: &'static str,
    class: &'static str,
    spin_pairing: bool,
    time_reversal_ok: bool,
}

fn cmd_table(format: Format) -> Result<String, Failure> {
    let rows = classification_table(&DEFAULT_K_GRID)?;
    let rows: Vec<TableRowOut> = rows
        .iter()
        .map(|r| TableRowOut {
            family: r.family,
            matrix: r.matrix_form,
            group: r.group,
            label: r.label,
            class: r.class.name(),
            spin_pairing: r.pairing_ok,
            time_reversal_ok: r.time_reversal_ok,
        })
        .collect();
    match format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut text =
                String::from("family,matrix,group,label,class,spin_pairing,time_reversal_ok\n");
            for row in rows {
                text.push_str(&format!(
                    "{},\"{}\",{},{},{},{},{}\n",
                    row.family,
                    row.matrix,
                    row.group,
                    row.label,
                    row.class,
                    row.spin_pairing,
                    row.time_reversal_ok
                ));
            }
            Ok(text)
        }
    }
}
