//! Bound functions and the radii of the invertibility and contraction regions.

use serde::Serialize;

use crate::error::{QspError, Result};

/// `h(x) = 2cosh(2x) - 2`, the bound on `‖DF(Φ) - 2I‖₁` at `‖Φ‖₁ = x`.
pub fn h(x: f64) -> f64 {
    2.0 * (2.0 * x).cosh() - 2.0
}

/// `h⁻¹` on `[0, ∞)`.
pub fn h_inverse(y: f64) -> f64 {
    0.5 * (1.0 + y / 2.0).acosh()
}

/// `H(x) = ∫₀ˣ 2 - h(t) dt = 4x - sinh(2x)`.
#[allow(non_snake_case)]
pub fn H(x: f64) -> f64 {
    4.0 * x - (2.0 * x).sinh()
}

/// `C₁(δ) = 2cosh(2δ)`.
pub fn c1(delta: f64) -> f64 {
    2.0 * (2.0 * delta).cosh()
}

/// `C₂(δ) = 4sinh(2δ)`.
pub fn c2(delta: f64) -> f64 {
    4.0 * (2.0 * delta).sinh()
}

/// `r_Φ = h⁻¹(2) = ½ arccosh 2`.
pub fn r_phi() -> f64 {
    0.5 * 2f64.acosh()
}

/// `r_c = H(r_Φ)`.
pub fn r_c() -> f64 {
    H(r_phi())
}

/// `H⁻¹` on `[0, r_c)`, by bisection on `[0, r_Φ]` where `H` is increasing.
#[allow(non_snake_case)]
pub fn H_inverse(theta: f64) -> Result<f64> {
    if !(0.0..r_c()).contains(&theta) {
        return Err(QspError::InverseDomain(theta));
    }
    let (mut lo, mut hi) = (0.0, r_phi());
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if H(mid) < theta {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `C̃(θ) = 2 - h(H⁻¹(θ))`, the lower quasi-isometry constant.
pub fn c_tilde(theta: f64) -> Result<f64> {
    Ok(2.0 - h(H_inverse(theta)?))
}

/// `γ(r) = ½∫₀¹ h(r + s(½sinh(2r) - r)) ds`, integrated in closed form.
pub fn gamma(r: f64) -> f64 {
    let slope = 0.5 * (2.0 * r).sinh() - r;
    if slope.abs() < 1e-6 {
        // Midpoint expansion: ∫₀¹ cosh(2(r + s a)) ds ≈ cosh(2r + a) (1 + a²/6).
        let m = 2.0 * r + slope;
        let avg = m.cosh() * (1.0 + slope * slope / 6.0);
        return avg - 1.0;
    }
    let integral_cosh = ((2.0 * (r + slope)).sinh() - (2.0 * r).sinh()) / (2.0 * slope);
    0.5 * (2.0 * integral_cosh - 2.0)
}

/// The universal constants of the convergence theory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constants {
    pub r_phi: f64,
    pub r_c: f64,
    pub r_phi_tilde: f64,
    pub r_c_tilde: f64,
    pub gamma_tilde: f64,
}

impl Constants {
    pub fn h(&self, x: f64) -> f64 {
        h(x)
    }

    #[allow(non_snake_case)]
    pub fn H(&self, x: f64) -> f64 {
        H(x)
    }

    #[allow(non_snake_case)]
    pub fn H_inverse(&self, theta: f64) -> Result<f64> {
        H_inverse(theta)
    }

    pub fn c1(&self, delta: f64) -> f64 {
        c1(delta)
    }

    pub fn c2(&self, delta: f64) -> f64 {
        c2(delta)
    }

    pub fn c_tilde(&self, theta: f64) -> Result<f64> {
        c_tilde(theta)
    }

    pub fn gamma(&self, r: f64) -> f64 {
        gamma(r)
    }
}

pub fn constants() -> Constants {
    let r_phi_tilde = 0.5 * 2f64.acosh().asinh();
    Constants {
        r_phi: r_phi(),
        r_c: r_c(),
        r_phi_tilde,
        r_c_tilde: H(r_phi_tilde),
        gamma_tilde: gamma(r_phi_tilde),
    }
}
