//! Fixed-point iteration `Φ^{t+1} = Φ^t - ½(F(Φ^t) - c)` and exact
//! Jacobian columns of `F`.

use std::f64::consts::FRAC_PI_4;
use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::chebyshev::{coeffs_of_samples, ChebyshevCoefficients, ForwardMap, NodeGrid};
use crate::constants::{self, H_inverse};
use crate::error::{QspError, Result};
use crate::kernel::{self, FullPhaseFactors, Parity, ReducedPhaseFactors};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Stop once `‖F(Φ^t) - c‖₁ ≤ tol`.
    pub tol: f64,
    pub max_iter: usize,
    /// Abort when the residual exceeds `divergence_factor · max(‖c‖₁, tol)`.
    pub divergence_factor: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_iter: 100,
            divergence_factor: 10.0,
        }
    }
}

impl SolverConfig {
    fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(QspError::InvalidParameter(format!("tol = {}", self.tol)));
        }
        if self.max_iter == 0 {
            return Err(QspError::InvalidParameter("max_iter = 0".into()));
        }
        if !(self.divergence_factor > 1.0) {
            return Err(QspError::InvalidParameter(format!(
                "divergence_factor = {}",
                self.divergence_factor
            )));
        }
        Ok(())
    }
}

/// Whether the target lies in the region where convergence is proven.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Guarantee {
    /// `‖c‖₁ ≤ r̃_c`.
    Certified,
    Uncertified,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverReport {
    pub phi: ReducedPhaseFactors,
    /// `‖F(Φ^t) - c‖₁` for `t = 0, 1, …`, starting at `Φ⁰ = 0`.
    pub residual_history: Vec<f64>,
    /// Number of updates applied.
    pub iterations: usize,
    pub converged: bool,
    pub guarantee: Guarantee,
    /// `H⁻¹(‖c‖₁)` when `‖c‖₁ < r_c`.
    pub apriori_phi_bound: Option<f64>,
}

impl SolverReport {
    pub fn final_residual(&self) -> f64 {
        self.residual_history.last().copied().unwrap_or(0.0)
    }
}

/// Stepwise driver for the iteration. Each call to [`step`] evaluates
/// `F(Φ^t)`, records the residual, and applies one update.
///
/// [`step`]: FixedPointIteration::step
pub struct FixedPointIteration<'a> {
    target: &'a [f64],
    map: Option<ForwardMap>,
    phi: ReducedPhaseFactors,
    t: usize,
}

/// State observed before the update from `Φ^t`.
#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    pub t: usize,
    pub residual: f64,
    pub phi: ReducedPhaseFactors,
}

impl<'a> FixedPointIteration<'a> {
    /// Iteration at the effective length of `c`.
    pub fn new(c: &'a ChebyshevCoefficients) -> Result<Self> {
        Self::with_len(c, c.effective_len())
    }

    /// Iteration at an explicit working length `len ≥ effective_len(c)`.
    pub fn with_len(c: &'a ChebyshevCoefficients, len: usize) -> Result<Self> {
        let eff = c.effective_len();
        if len < eff {
            return Err(QspError::LengthMismatch { left: len, right: eff });
        }
        if c.coeffs().iter().any(|v| !v.is_finite()) {
            return Err(QspError::InvalidParameter("non-finite coefficient".into()));
        }
        let map = if len == 0 {
            None
        } else {
            Some(ForwardMap::new(len, c.parity())?)
        };
        Ok(Self {
            target: &c.coeffs()[..eff],
            map,
            phi: ReducedPhaseFactors::zeros(len, c.parity()),
            t: 0,
        })
    }

    pub fn phi(&self) -> &ReducedPhaseFactors {
        &self.phi
    }

    fn residual_vector(&self) -> Result<Vec<f64>> {
        let Some(map) = &self.map else {
            return Ok(Vec::new());
        };
        let f = map.apply(&self.phi)?;
        Ok(f
            .coeffs()
            .iter()
            .take(self.phi.len())
            .enumerate()
            .map(|(j, &v)| v - self.target.get(j).copied().unwrap_or(0.0))
            .collect())
    }

    /// Residual at the current iterate, without updating.
    pub fn residual(&self) -> Result<f64> {
        Ok(kernel::one_norm(&self.residual_vector()?))
    }

    /// Evaluates the residual at `Φ^t` and advances to `Φ^{t+1}`.
    pub fn step(&mut self) -> Result<Step> {
        let r = self.residual_vector()?;
        let step = Step {
            t: self.t,
            residual: kernel::one_norm(&r),
            phi: self.phi.clone(),
        };
        self.update(&r);
        Ok(step)
    }

    fn update(&mut self, r: &[f64]) {
        for (p, ri) in self.phi.values_mut().iter_mut().zip(r) {
            *p -= 0.5 * ri;
        }
        self.t += 1;
    }
}

/// Solves `F(Φ) = c` from `Φ⁰ = 0`.
pub fn fpi_solve(c: &ChebyshevCoefficients, config: &SolverConfig) -> Result<SolverReport> {
    solve_with(FixedPointIteration::new(c)?, c, config)
}

/// As [`fpi_solve`], at a working length at least the effective length of `c`.
pub fn fpi_solve_at_len(
    c: &ChebyshevCoefficients,
    len: usize,
    config: &SolverConfig,
) -> Result<SolverReport> {
    solve_with(FixedPointIteration::with_len(c, len)?, c, config)
}

fn solve_with(
    mut iter: FixedPointIteration<'_>,
    c: &ChebyshevCoefficients,
    config: &SolverConfig,
) -> Result<SolverReport> {
    config.validate()?;
    let k = constants::constants();
    let c_norm = c.one_norm();
    let guarantee = if c_norm <= k.r_c_tilde {
        Guarantee::Certified
    } else {
        Guarantee::Uncertified
    };
    let apriori_phi_bound = H_inverse(c_norm).ok();
    let limit = config.divergence_factor * c_norm.max(config.tol);

    let mut history = Vec::new();
    let mut converged = false;
    loop {
        let t = history.len();
        let r = iter.residual_vector()?;
        let residual = kernel::one_norm(&r);
        history.push(residual);
        if !residual.is_finite() || residual > limit {
            return Err(QspError::Diverged {
                iteration: t,
                residual,
                limit,
            });
        }
        if residual <= config.tol {
            converged = true;
            break;
        }
        if t == config.max_iter {
            break;
        }
        iter.update(&r);
    }
    let iterations = history.len() - 1;
    Ok(SolverReport {
        phi: iter.phi,
        residual_history: history,
        iterations,
        converged,
        guarantee,
        apriori_phi_bound,
    })
}

/// Column `k` of `DF(Φ)`, exactly: `F(Φ + π/4 e_k) - F(Φ - π/4 e_k)`.
///
/// Both evaluations use working length `max(len(Φ), k+1)`.
pub fn jacobian_column(phi: &ReducedPhaseFactors, k: usize) -> Result<ChebyshevCoefficients> {
    let len = phi.len().max(k + 1);
    let map = ForwardMap::new(len, phi.parity())?;
    jacobian_column_with(&map, &phi.resized(len), k)
}

fn jacobian_column_with(
    map: &ForwardMap,
    phi: &ReducedPhaseFactors,
    k: usize,
) -> Result<ChebyshevCoefficients> {
    let mut plus = phi.clone();
    plus.values_mut()[k] += FRAC_PI_4;
    let mut minus = phi.clone();
    minus.values_mut()[k] -= FRAC_PI_4;
    let fp = map.apply(&plus)?;
    let fm = map.apply(&minus)?;
    let col = fp
        .coeffs()
        .iter()
        .zip(fm.coeffs())
        .map(|(a, b)| a - b)
        .collect();
    Ok(ChebyshevCoefficients::new(col, phi.parity()))
}

/// Square Jacobian `DF(Φ)` at the working length of `Φ`, column-major:
/// `result[k]` is column `k`.
pub fn jacobian(phi: &ReducedPhaseFactors) -> Result<Vec<Vec<f64>>> {
    let map = ForwardMap::new(phi.len(), phi.parity())?;
    (0..phi.len())
        .map(|k| jacobian_column_with(&map, phi, k).map(|c| c.into_coeffs()))
        .collect()
}

/// `‖A‖₁` as the largest absolute column sum; `columns[k]` is column `k`.
pub fn column_sum_norm(columns: &[Vec<f64>]) -> f64 {
    columns
        .iter()
        .map(|col| kernel::one_norm(col))
        .fold(0.0, f64::max)
}

/// `‖𝓕(g(·, Ψ))‖₁` for a full (not necessarily symmetric) phase-factor set.
pub fn full_coefficient_norm(psi: &FullPhaseFactors) -> f64 {
    let d = psi.degree();
    let samples = NodeGrid::new(d).sample(|x| kernel::top_left_unchecked(x, psi.values()).im);
    coeffs_of_samples(&samples, Parity::of_degree(d))
        .expect("grid has an odd number of nodes")
        .one_norm()
}

/// `‖𝓕(∂_r ∂_s g(·, Ψ))‖₁`, using `∂_r ∂_s U(x, Ψ) = U(x, Ψ + π/2 e_r + π/2 e_s)`.
///
/// For `r == s` the shift is `π e_r`, which negates `U`; the value is then
/// `‖𝓕(g(·, Ψ))‖₁`.
pub fn hessian_entry_norm(psi: &FullPhaseFactors, r: usize, s: usize) -> Result<f64> {
    let len = psi.values().len();
    for idx in [r, s] {
        if idx >= len {
            return Err(QspError::IndexOutOfRange { index: idx, len });
        }
    }
    if r == s {
        return Ok(full_coefficient_norm(psi));
    }
    let mut shifted = psi.values().to_vec();
    shifted[r] += FRAC_PI_2;
    shifted[s] += FRAC_PI_2;
    Ok(full_coefficient_norm(&FullPhaseFactors::new(shifted)))
}
