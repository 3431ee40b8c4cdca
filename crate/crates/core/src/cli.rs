//! Command-line front end: target specifications, run artifacts, and the
//! `solve`, `decay`, `verify` and `constants` subcommands.
//!
//! All reals written by this module use 17 significant digits so that
//! every `f64` survives a write/read cycle unchanged.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::analysis::{decay_profile, max_pointwise_error, target_samples_abs_x_cubed};
use crate::bessel::jacobi_anger;
use crate::chebyshev::{forward_map, ChebyshevCoefficients};
use crate::constants::constants;
use crate::error::QspError;
use crate::kernel::{Parity, ReducedPhaseFactors};
use crate::solver::{fpi_solve, Guarantee, SolverConfig};

/// Formats a real with 17 significant digits; non-finite values become `null`.
pub fn format_real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_owned()
    }
}

mod real17 {
    use serde::{Serialize, Serializer};
    use serde_json::value::RawValue;

    use super::format_real;

    fn raw(x: f64) -> Box<RawValue> {
        RawValue::from_string(format_real(x)).expect("formatted real is valid JSON")
    }

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        raw(*x).serialize(s)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
            match x {
                Some(v) => s.serialize_some(&raw(*v)),
                None => s.serialize_none(),
            }
        }
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(xs.len()))?;
            for &x in xs {
                seq.serialize_element(&raw(x))?;
            }
            seq.end()
        }
    }
}

fn default_scale_ja() -> f64 {
    0.5
}

fn default_eps0() -> f64 {
    1e-14
}

fn default_scale_abs() -> f64 {
    0.8
}

fn default_degree() -> usize {
    1000
}

/// A solve request. Serialized as a JSON object tagged by `kind`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum TargetSpec {
    Coefficients {
        parity: Parity,
        #[serde(serialize_with = "real17::vec::serialize")]
        coeffs: Vec<f64>,
    },
    JacobiAngerEven {
        #[serde(serialize_with = "real17::serialize")]
        tau: f64,
        #[serde(default = "default_eps0", serialize_with = "real17::serialize")]
        eps0: f64,
        #[serde(default = "default_scale_ja", serialize_with = "real17::serialize")]
        scale: f64,
    },
    JacobiAngerOdd {
        #[serde(serialize_with = "real17::serialize")]
        tau: f64,
        #[serde(default = "default_eps0", serialize_with = "real17::serialize")]
        eps0: f64,
        #[serde(default = "default_scale_ja", serialize_with = "real17::serialize")]
        scale: f64,
    },
    AbsXCubed {
        #[serde(default = "default_scale_abs", serialize_with = "real17::serialize")]
        scale: f64,
        /// Truncation index: coefficients of `T_0, T_2, …, T_{2·degree}`.
        #[serde(default = "default_degree")]
        degree: usize,
    },
}

impl TargetSpec {
    /// Chebyshev coefficients of the target.
    pub fn coefficients(&self) -> Result<ChebyshevCoefficients, QspError> {
        match self {
            TargetSpec::Coefficients { parity, coeffs } => {
                if coeffs.iter().any(|c| !c.is_finite()) {
                    return Err(QspError::InvalidParameter("non-finite coefficient".into()));
                }
                Ok(ChebyshevCoefficients::new(coeffs.clone(), *parity))
            }
            TargetSpec::JacobiAngerEven { tau, eps0, scale } => {
                Ok(jacobi_anger(*tau, *eps0, *scale)?.even)
            }
            TargetSpec::JacobiAngerOdd { tau, eps0, scale } => {
                Ok(jacobi_anger(*tau, *eps0, *scale)?.odd)
            }
            TargetSpec::AbsXCubed { scale, degree } => {
                if !scale.is_finite() {
                    return Err(QspError::InvalidParameter(format!("scale = {scale}")));
                }
                Ok(target_samples_abs_x_cubed(*scale, *degree))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    #[serde(serialize_with = "real17::serialize")]
    pub tol: f64,
    pub max_iter: usize,
    #[serde(serialize_with = "real17::serialize")]
    pub divergence_factor: f64,
}

impl From<SolverConfig> for ConfigEcho {
    fn from(c: SolverConfig) -> Self {
        Self {
            tol: c.tol,
            max_iter: c.max_iter,
            divergence_factor: c.divergence_factor,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Norms {
    #[serde(serialize_with = "real17::serialize")]
    pub c_one_norm: f64,
    #[serde(serialize_with = "real17::serialize")]
    pub phi_one_norm: f64,
    #[serde(serialize_with = "real17::option::serialize")]
    pub apriori_bound: Option<f64>,
}

/// Everything a solve produced, in a form that can be re-verified later.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunArtifact {
    pub target: TargetSpec,
    pub config: ConfigEcho,
    pub parity: Parity,
    #[serde(serialize_with = "real17::vec::serialize")]
    pub coefficients: Vec<f64>,
    #[serde(serialize_with = "real17::vec::serialize")]
    pub phase_factors: Vec<f64>,
    #[serde(serialize_with = "real17::vec::serialize")]
    pub residual_history: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    pub guarantee: Guarantee,
    pub norms: Norms,
    #[serde(serialize_with = "real17::serialize")]
    pub timing_seconds: f64,
}

impl RunArtifact {
    pub fn coefficients(&self) -> ChebyshevCoefficients {
        ChebyshevCoefficients::new(self.coefficients.clone(), self.parity)
    }

    pub fn phi(&self) -> ReducedPhaseFactors {
        ReducedPhaseFactors::new(self.phase_factors.clone(), self.parity)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("artifact serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        Self::from_json(&read_file(path)?)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed input: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Numerics(#[from] QspError),
}

impl CliError {
    /// Divergence is a non-convergence outcome (2); everything else is an
    /// input error (1).
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Numerics(QspError::Diverged { .. }) => 2,
            _ => 1,
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_owned(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

/// Runs the solver on a target and packages the result.
pub fn solve_target(target: &TargetSpec, config: &SolverConfig) -> Result<RunArtifact, CliError> {
    let c = target.coefficients()?;
    let start = Instant::now();
    let report = fpi_solve(&c, config)?;
    let timing_seconds = start.elapsed().as_secs_f64();
    Ok(RunArtifact {
        target: target.clone(),
        config: (*config).into(),
        parity: c.parity(),
        norms: Norms {
            c_one_norm: c.one_norm(),
            phi_one_norm: report.phi.one_norm(),
            apriori_bound: report.apriori_phi_bound,
        },
        coefficients: c.into_coeffs(),
        phase_factors: report.phi.into_values(),
        residual_history: report.residual_history,
        iterations: report.iterations,
        converged: report.converged,
        guarantee: report.guarantee,
        timing_seconds,
    })
}

/// Decay table: `n,tail_c,tail_phi,bound_rhs`, then a `#` row with the
/// fitted rates.
pub fn decay_csv(artifact: &RunArtifact) -> Result<String, CliError> {
    let profile = decay_profile(&artifact.coefficients(), &artifact.phi())?;
    let mut out = String::from("n,tail_c,tail_phi,bound_rhs\n");
    for (n, (tc, tp)) in profile
        .tail_sums_c
        .iter()
        .zip(&profile.tail_sums_phi)
        .enumerate()
    {
        let rhs = profile
            .decay_constant
            .map(|k| format_real(k * tc))
            .unwrap_or_default();
        writeln!(out, "{n},{},{},{rhs}", format_real(*tc), format_real(*tp)).unwrap();
    }
    let rate = |r: Option<f64>| r.map(format_real).unwrap_or_default();
    writeln!(
        out,
        "# fitted_rate_c={},fitted_rate_phi={}",
        rate(profile.fitted_rate_c),
        rate(profile.fitted_rate_phi)
    )
    .unwrap();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verification {
    /// `L(Φ)`, the largest pointwise error on the positive Chebyshev roots.
    pub max_pointwise_error: f64,
    /// `‖F(Φ) - c‖₁`.
    pub residual: f64,
}

pub fn verify_artifact(artifact: &RunArtifact) -> Result<Verification, CliError> {
    let c = artifact.coefficients();
    let phi = artifact.phi();
    let residual = if phi.is_empty() {
        c.one_norm()
    } else {
        forward_map(&phi)?.distance(&c)
    };
    Ok(Verification {
        max_pointwise_error: max_pointwise_error(&phi, &c)?,
        residual,
    })
}

pub fn constants_json() -> String {
    let k = constants();
    format!(
        "{{\n  \"r_phi\": {},\n  \"r_c\": {},\n  \"r_phi_tilde\": {},\n  \"r_c_tilde\": {},\n  \"gamma_tilde\": {}\n}}\n",
        format_real(k.r_phi),
        format_real(k.r_c),
        format_real(k.r_phi_tilde),
        format_real(k.r_c_tilde),
        format_real(k.gamma_tilde),
    )
}

#[derive(Debug, Parser)]
#[command(name = "qsp", about = "Symmetric QSP phase factors by fixed-point iteration")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve for reduced phase factors of a target and write a run artifact.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long = "max-iter", default_value_t = 100)]
        max_iter: usize,
        /// Defaults to standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write tail sums and the decay bound of a run artifact as CSV.
    Decay {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print L(Φ) and ‖F(Φ) - c‖₁ for a run artifact.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Print the convergence constants as JSON.
    Constants,
}

fn run_command(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Solve {
            input,
            tol,
            max_iter,
            output,
        } => {
            let target: TargetSpec = serde_json::from_str(&read_file(&input)?)?;
            let config = SolverConfig {
                tol,
                max_iter,
                ..SolverConfig::default()
            };
            let artifact = solve_target(&target, &config)?;
            write_output(output.as_deref(), &artifact.to_json())?;
            Ok(if artifact.converged { 0 } else { 2 })
        }
        Command::Decay { input, output } => {
            let csv = decay_csv(&RunArtifact::read(&input)?)?;
            write_output(output.as_deref(), &csv)?;
            Ok(0)
        }
        Command::Verify { input } => {
            let v = verify_artifact(&RunArtifact::read(&input)?)?;
            let text = format!(
                "max_pointwise_error={}\nresidual_l1={}\n",
                format_real(v.max_pointwise_error),
                format_real(v.residual)
            );
            write_output(None, &text)?;
            Ok(0)
        }
        Command::Constants => {
            write_output(None, &constants_json())?;
            Ok(0)
        }
    }
}

/// Executes a parsed command; diagnostics go to standard error as one line.
pub fn run(cli: Cli) -> ExitCode {
    match run_command(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.to_string().replace('\n', " "));
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_real(0.1), "1.0000000000000001e-1");
        assert_eq!(format_real(f64::NAN), "null");
        for &x in &[0.1, 1.0 / 3.0, -2.5e-300, 123456.789] {
            assert_eq!(format_real(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn target_spec_parses() {
        let t: TargetSpec =
            serde_json::from_str(r#"{"kind": "coefficients", "parity": "even", "coeffs": [0.3]}"#)
                .unwrap();
        assert_eq!(t.coefficients().unwrap().coeffs(), &[0.3]);
        let t: TargetSpec =
            serde_json::from_str(r#"{"kind": "jacobi-anger-odd", "tau": 10}"#).unwrap();
        assert_eq!(
            t,
            TargetSpec::JacobiAngerOdd {
                tau: 10.0,
                eps0: 1e-14,
                scale: 0.5
            }
        );
        assert!(serde_json::from_str::<TargetSpec>(r#"{"kind": "nope"}"#).is_err());
        assert!(serde_json::from_str::<TargetSpec>(
            r#"{"kind": "coefficients", "parity": "even", "coeffs": [0.3], "extra": 1}"#
        )
        .is_err());
    }

    #[test]
    fn constants_json_parses() {
        let v: serde_json::Value = serde_json::from_str(&constants_json()).unwrap();
        let r_c = v["r_c"].as_f64().unwrap();
        assert!((r_c - 0.902).abs() < 5e-4);
    }

    #[test]
    fn artifact_json_is_valid() {
        let target = TargetSpec::Coefficients {
            parity: Parity::Odd,
            coeffs: vec![0.1, -0.02],
        };
        let a = solve_target(&target, &SolverConfig::default()).unwrap();
        let back = RunArtifact::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
    }
}
