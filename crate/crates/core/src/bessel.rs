//! Bessel functions of the first kind and Jacobi–Anger targets.

use crate::chebyshev::ChebyshevCoefficients;
use crate::error::{QspError, Result};
use crate::kernel::Parity;

const RESCALE_AT: f64 = 1e250;

/// Start index for the backward recurrence.
///
/// At least `⌈1.4τ⌉ + 60`, and far enough above `kmax` that the minimal
/// solution dominates there as well. Always even.
fn miller_start(kmax: usize, tau: f64) -> usize {
    let base = (1.4 * tau).ceil() as usize + 60;
    let reach = kmax.max(tau.ceil() as usize).max(1);
    let m = base.max(reach + 20 + (160.0 * reach as f64).sqrt().ceil() as usize);
    m + m % 2
}

/// `J_0(τ), …, J_kmax(τ)` for `τ ≥ 0` by Miller's backward recurrence,
/// normalized with `J_0 + 2 Σ J_{2k} = 1`.
pub fn bessel_j_sequence(kmax: usize, tau: f64) -> Vec<f64> {
    assert!(tau >= 0.0 && tau.is_finite(), "tau must be finite and non-negative");
    let mut out = vec![0.0; kmax + 1];
    if tau == 0.0 {
        out[0] = 1.0;
        return out;
    }
    let m = miller_start(kmax, tau);
    let (mut above, mut current) = (0.0f64, 1.0f64);
    let mut norm = 0.0;
    // current holds the unnormalized J_k, above holds J_{k+1}.
    for k in (0..=m).rev() {
        if k <= kmax {
            out[k] = current;
        }
        if k % 2 == 0 {
            norm += if k == 0 { current } else { 2.0 * current };
        }
        if k == 0 {
            break;
        }
        let below = 2.0 * k as f64 / tau * current - above;
        above = current;
        current = below;
        if current.abs() > RESCALE_AT {
            let s = 1.0 / RESCALE_AT;
            current *= s;
            above *= s;
            norm *= s;
            for v in out.iter_mut().skip(k - 1) {
                *v *= s;
            }
        }
    }
    for v in &mut out {
        *v /= norm;
    }
    out
}

/// `J_k(τ)` for `τ ≥ 0`.
pub fn bessel_j(k: usize, tau: f64) -> f64 {
    bessel_j_sequence(k, tau)[k]
}

/// Even and odd parts of the Jacobi–Anger expansion of `e^{iτx}`,
/// truncated below `d = ⌈1.4|τ| + ln(1/ε₀)⌉` and multiplied by `scale`.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiAnger {
    /// `scale · (J_0, -2J_2, 2J_4, …)`: the `cos(τx)` part.
    pub even: ChebyshevCoefficients,
    /// `scale · (2J_1, -2J_3, …)`: the `sin(τx)` part.
    pub odd: ChebyshevCoefficients,
    pub degree: usize,
}

pub fn jacobi_anger(tau: f64, eps0: f64, scale: f64) -> Result<JacobiAnger> {
    if !tau.is_finite() {
        return Err(QspError::InvalidParameter(format!("tau = {tau}")));
    }
    if !(eps0 > 0.0 && eps0 < 1.0) {
        return Err(QspError::InvalidParameter(format!(
            "eps0 = {eps0} must lie in (0, 1)"
        )));
    }
    if !(scale > 0.0 && scale <= 1.0) {
        return Err(QspError::InvalidParameter(format!(
            "scale = {scale} must lie in (0, 1]"
        )));
    }
    let degree = (1.4 * tau.abs() + (1.0 / eps0).ln()).ceil() as usize;
    let j = bessel_j_sequence(degree, tau.abs());
    // J_k(-τ) = (-1)^k J_k(τ)
    let signed = |k: usize| {
        if tau < 0.0 && k % 2 == 1 {
            -j[k]
        } else {
            j[k]
        }
    };
    let alternating = |n: usize| if n % 2 == 0 { 1.0 } else { -1.0 };

    let even = (0..degree)
        .step_by(2)
        .map(|k| {
            if k == 0 {
                scale * signed(0)
            } else {
                scale * 2.0 * alternating(k / 2) * signed(k)
            }
        })
        .collect();
    let odd = (1..degree)
        .step_by(2)
        .map(|k| scale * 2.0 * alternating((k - 1) / 2) * signed(k))
        .collect();
    Ok(JacobiAnger {
        even: ChebyshevCoefficients::new(even, Parity::Even),
        odd: ChebyshevCoefficients::new(odd, Parity::Odd),
        degree,
    })
}
