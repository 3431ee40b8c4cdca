//! Tail-decay profiles and pointwise verification of solved phase factors.

use std::f64::consts::PI;

use crate::chebyshev::{clenshaw, coeffs_of_samples, ChebyshevCoefficients, NodeGrid};
use crate::constants::{h, H_inverse};
use crate::error::{QspError, Result};
use crate::kernel::{self, expand_symmetric, Parity, ReducedPhaseFactors};

/// Indices skipped at either end of a slope fit.
const FIT_MARGIN: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct DecayProfile {
    /// `Σ_{k>n} |c_k|` for `n = 0, …, len-1`.
    pub tail_sums_c: Vec<f64>,
    /// `Σ_{k>n} |φ_k|` for `n = 0, …, len-1`.
    pub tail_sums_phi: Vec<f64>,
    /// Log-log slope of `|c_k|` against `k`.
    pub fitted_rate_c: Option<f64>,
    /// Log-log slope of `|φ_k|` against `k`.
    pub fitted_rate_phi: Option<f64>,
    /// `1 / (2 - h(H⁻¹(‖c‖₁)))` when `‖c‖₁ < r_c`.
    pub decay_constant: Option<f64>,
    pub c_one_norm: f64,
}

/// `Σ_{k>n} |v_k|` for every `n`, accumulated from the back so the
/// sequence is non-increasing and ends in 0.
pub fn tail_sums(v: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; v.len()];
    for n in (0..v.len().saturating_sub(1)).rev() {
        out[n] = out[n + 1] + v[n + 1].abs();
    }
    out
}

/// Index window `[lo, hi)` used for slope fits: the middle two quartiles,
/// kept clear of the first and last `FIT_MARGIN` entries.
pub fn fit_window(len: usize) -> (usize, usize) {
    let lo = (len / 4).max(FIT_MARGIN);
    let hi = (3 * len / 4).min(len.saturating_sub(FIT_MARGIN));
    (lo, hi.max(lo))
}

/// Least-squares slope of `log|v_k|` against `log k` over [`fit_window`].
/// Zero entries are skipped; `None` with fewer than three usable points.
pub fn fit_algebraic_rate(v: &[f64]) -> Option<f64> {
    let (lo, hi) = fit_window(v.len());
    let pts: Vec<(f64, f64)> = (lo..hi)
        .filter(|&k| k > 0 && v[k] != 0.0 && v[k].is_finite())
        .map(|k| ((k as f64).ln(), v[k].abs().ln()))
        .collect();
    if pts.len() < 3 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    Some(sxy / sxx)
}

/// `C = 1/(2 - h(H⁻¹(θ)))` for `θ < r_c`.
pub fn decay_constant(c_norm: f64) -> Option<f64> {
    H_inverse(c_norm).ok().map(|r| 1.0 / (2.0 - h(r)))
}

pub fn decay_profile(c: &ChebyshevCoefficients, phi: &ReducedPhaseFactors) -> Result<DecayProfile> {
    if c.parity() != phi.parity() {
        return Err(QspError::ParityMismatch("coefficients vs phase factors"));
    }
    if c.len() != phi.len() && c.effective_len() != phi.effective_len() {
        return Err(QspError::LengthMismatch {
            left: c.effective_len(),
            right: phi.effective_len(),
        });
    }
    let n = c.len().max(phi.len());
    let cv = c.resized(n).into_coeffs();
    let pv = phi.resized(n).into_values();
    let c_one_norm = c.one_norm();
    Ok(DecayProfile {
        tail_sums_c: tail_sums(&cv),
        tail_sums_phi: tail_sums(&pv),
        fitted_rate_c: fit_algebraic_rate(&cv),
        fitted_rate_phi: fit_algebraic_rate(&pv),
        decay_constant: decay_constant(c_one_norm),
        c_one_norm,
    })
}

/// Checks `Σ_{k>n}|φ_k| ≤ C Σ_{k>n}|c_k|` for every `n`.
pub fn check_decay_bound(profile: &DecayProfile) -> Result<bool> {
    let constant = profile
        .decay_constant
        .ok_or(QspError::BoundNotApplicable(profile.c_one_norm))?;
    Ok(profile
        .tail_sums_phi
        .iter()
        .zip(&profile.tail_sums_c)
        .all(|(p, c)| *p <= constant * c + 1e-10))
}

/// `max_j |g(x_j, Φ) - f(x_j)|` over the positive roots
/// `x_j = cos((2j-1)π/(4n))`, `j = 1…n`, of `T_{2n}`, where `f` is the
/// Chebyshev series `c` and `n = max(len Φ, len c, 1)`.
pub fn max_pointwise_error(phi: &ReducedPhaseFactors, c: &ChebyshevCoefficients) -> Result<f64> {
    if phi.parity() != c.parity() {
        return Err(QspError::ParityMismatch("phase factors vs coefficients"));
    }
    let n = phi.len().max(c.len()).max(1);
    let psi = if phi.is_empty() && phi.parity() == Parity::Odd {
        None
    } else {
        Some(expand_symmetric(phi)?)
    };
    let target = c.to_full_basis();
    let err = (1..=n)
        .map(|j| {
            let x = ((2 * j - 1) as f64 * PI / (4 * n) as f64).cos();
            let gx = psi
                .as_ref()
                .map_or(0.0, |p| kernel::top_left_unchecked(x, p.values()).im);
            (gx - clenshaw(&target, x)).abs()
        })
        .fold(0.0, f64::max);
    Ok(err)
}

/// Even Chebyshev coefficients `c_0, …, c_d` (of `T_0, T_2, …, T_{2d}`) of
/// `scale·|x|³`, by sampling on a node grid of degree `16d`.
pub fn target_samples_abs_x_cubed(scale: f64, d: usize) -> ChebyshevCoefficients {
    let grid = NodeGrid::new((16 * d).max(64));
    let samples = grid.sample(|x| scale * x.abs().powi(3));
    coeffs_of_samples(&samples, Parity::Even)
        .expect("grid has an odd number of nodes")
        .resized(d + 1)
}
