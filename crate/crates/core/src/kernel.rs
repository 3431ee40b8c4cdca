//! Evaluation of the QSP unitary and of the scalar function it encodes.
//!
//! The unitary is
//!
//! ```text
//! U(x, Ψ) = e^{iψ_0 Z} W(x) e^{iψ_1 Z} W(x) ... W(x) e^{iψ_d Z},
//! W(x)    = [[x, i√(1-x²)], [i√(1-x²), x]]
//! ```
//!
//! and `g(x, Ψ) = Im <0|U(x, Ψ)|0>`. Reduced phase factors are the
//! independent half of a symmetric `Ψ`; see [`expand_symmetric`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{QspError, Result};

/// Parity of a target function, and therefore of its phase factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// Expands in `T_{2j}`.
    Even,
    /// Expands in `T_{2j+1}`.
    Odd,
}

impl Parity {
    /// Chebyshev index carried by the `j`-th coefficient.
    pub fn chebyshev_index(self, j: usize) -> usize {
        match self {
            Parity::Even => 2 * j,
            Parity::Odd => 2 * j + 1,
        }
    }

    /// Polynomial degree associated with `len` reduced entries.
    ///
    /// An empty even vector is treated as `(0)`, i.e. degree 0.
    pub fn degree_for_len(self, len: usize) -> usize {
        match self {
            Parity::Even => 2 * len.max(1) - 2,
            Parity::Odd => (2 * len).saturating_sub(1),
        }
    }

    /// Number of reduced entries for a polynomial of degree `d`: `⌈(d+1)/2⌉`.
    pub fn reduced_len(d: usize) -> usize {
        d / 2 + 1
    }

    /// Parity of a degree-`d` polynomial.
    pub fn of_degree(d: usize) -> Parity {
        if d % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// Number of leading entries up to and including the last nonzero one.
pub(crate) fn effective_len(values: &[f64]) -> usize {
    values.iter().rposition(|&v| v != 0.0).map_or(0, |i| i + 1)
}

pub(crate) fn one_norm(values: &[f64]) -> f64 {
    values.iter().map(|v| v.abs()).sum()
}

/// Reduced phase factors `Φ = (φ_0, …, φ_{d̃-1})` with a parity tag.
///
/// The stored length is the *working* length; trailing zeros are allowed and
/// do not change the encoded function.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedPhaseFactors {
    values: Vec<f64>,
    parity: Parity,
}

impl ReducedPhaseFactors {
    pub fn new(values: Vec<f64>, parity: Parity) -> Self {
        Self { values, parity }
    }

    pub fn zeros(len: usize, parity: Parity) -> Self {
        Self::new(vec![0.0; len], parity)
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Stored (working) length.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// One plus the index of the last nonzero entry; 0 for the zero vector.
    pub fn effective_len(&self) -> usize {
        effective_len(&self.values)
    }

    /// Degree of the full symmetric phase-factor set at the working length.
    pub fn full_degree(&self) -> usize {
        self.parity.degree_for_len(self.values.len())
    }

    pub fn one_norm(&self) -> f64 {
        one_norm(&self.values)
    }

    /// Copy extended with zeros (or truncated) to `len` entries.
    pub fn resized(&self, len: usize) -> Self {
        let mut values = self.values.clone();
        values.resize(len, 0.0);
        Self::new(values, self.parity)
    }
}

/// Full phase factors `Ψ = (ψ_0, …, ψ_d)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FullPhaseFactors(pub Vec<f64>);

impl FullPhaseFactors {
    pub fn new(values: Vec<f64>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    /// Polynomial degree `d` (number of `W` factors). Empty input has degree 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn one_norm(&self) -> f64 {
        one_norm(&self.0)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|j| self.0[j] == self.0[n - 1 - j])
    }
}

/// Expand reduced phase factors into the symmetric full set.
///
/// Even: `(φ_{n-1}, …, φ_1, 2φ_0, φ_1, …, φ_{n-1})`.
/// Odd: `(φ_{n-1}, …, φ_0, φ_0, …, φ_{n-1})`.
///
/// Expansion uses the stored length, so zero padding is kept.
pub fn expand_symmetric(phi: &ReducedPhaseFactors) -> Result<FullPhaseFactors> {
    let v = phi.values();
    match phi.parity() {
        Parity::Even => {
            if v.is_empty() {
                return Ok(FullPhaseFactors(vec![0.0]));
            }
            let mut full = Vec::with_capacity(2 * v.len() - 1);
            full.extend(v[1..].iter().rev());
            full.push(2.0 * v[0]);
            full.extend(&v[1..]);
            Ok(FullPhaseFactors(full))
        }
        Parity::Odd => {
            if v.is_empty() {
                return Err(QspError::NoDegreesOfFreedom);
            }
            let mut full = Vec::with_capacity(2 * v.len());
            full.extend(v.iter().rev());
            full.extend(v);
            Ok(FullPhaseFactors(full))
        }
    }
}

/// A 2×2 complex matrix, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2Matrix {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl Su2Matrix {
    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self { a: one, b: zero, c: zero, d: one }
    }

    pub fn mul(&self, rhs: &Su2Matrix) -> Su2Matrix {
        Su2Matrix {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }

    pub fn adjoint(&self) -> Su2Matrix {
        Su2Matrix {
            a: self.a.conj(),
            b: self.c.conj(),
            c: self.b.conj(),
            d: self.d.conj(),
        }
    }

    /// `e^{iθZ} = diag(e^{iθ}, e^{-iθ})`.
    pub fn z_rotation(theta: f64) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        Self {
            a: Complex64::cis(theta),
            b: zero,
            c: zero,
            d: Complex64::cis(-theta),
        }
    }

    /// Signal operator `W(x)`.
    pub fn signal(x: f64) -> Self {
        let s = sqrt_one_minus_square(x);
        Self {
            a: Complex64::new(x, 0.0),
            b: Complex64::new(0.0, s),
            c: Complex64::new(0.0, s),
            d: Complex64::new(x, 0.0),
        }
    }

    /// Largest entrywise deviation of `M M†` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let p = self.mul(&self.adjoint());
        let id = Su2Matrix::identity();
        [p.a - id.a, p.b - id.b, p.c - id.c, p.d - id.d]
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

/// `√(1-x²)`, switching to `sin(arccos x)` near the endpoints.
pub fn sqrt_one_minus_square(x: f64) -> f64 {
    if x.abs() > 0.99 {
        x.acos().sin()
    } else {
        (1.0 - x * x).sqrt()
    }
}

fn check_domain(x: f64) -> Result<()> {
    if x.abs() <= 1.0 {
        Ok(())
    } else {
        Err(QspError::Domain(x))
    }
}

/// One row of the running product, right-multiplied factor by factor.
#[derive(Clone, Copy)]
struct Row(Complex64, Complex64);

impl Row {
    #[inline(always)]
    fn times_signal(self, x: f64, s: f64) -> Row {
        // [u v] · [[x, is], [is, x]]
        let Row(u, v) = self;
        Row(
            Complex64::new(u.re * x - v.im * s, u.im * x + v.re * s),
            Complex64::new(v.re * x - u.im * s, v.im * x + u.re * s),
        )
    }

    #[inline(always)]
    fn times_phase(self, phase: Complex64) -> Row {
        Row(self.0 * phase, self.1 * phase.conj())
    }
}

#[inline]
fn propagate(mut row: Row, x: f64, s: f64, psi: &[f64]) -> Row {
    for &p in psi {
        row = row.times_signal(x, s).times_phase(Complex64::cis(p));
    }
    row
}

/// `U(x, Ψ)` accumulated left to right in index order.
pub fn qsp_unitary(x: f64, psi: &FullPhaseFactors) -> Result<Su2Matrix> {
    check_domain(x)?;
    let v = psi.values();
    let Some((&first, rest)) = v.split_first() else {
        return Ok(Su2Matrix::identity());
    };
    let s = sqrt_one_minus_square(x);
    let start = Complex64::cis(first);
    let zero = Complex64::new(0.0, 0.0);
    let top = propagate(Row(start, zero), x, s, rest);
    let bottom = propagate(Row(zero, start.conj()), x, s, rest);
    Ok(Su2Matrix {
        a: top.0,
        b: top.1,
        c: bottom.0,
        d: bottom.1,
    })
}

/// Top-left entry of `U(x, Ψ)`. Same arithmetic as the first row of
/// [`qsp_unitary`], so results agree bit for bit.
pub fn top_left(x: f64, psi: &FullPhaseFactors) -> Result<Complex64> {
    check_domain(x)?;
    Ok(top_left_unchecked(x, psi.values()))
}

pub(crate) fn top_left_unchecked(x: f64, psi: &[f64]) -> Complex64 {
    let Some((&first, rest)) = psi.split_first() else {
        return Complex64::new(1.0, 0.0);
    };
    let s = sqrt_one_minus_square(x);
    propagate(Row(Complex64::cis(first), Complex64::new(0.0, 0.0)), x, s, rest).0
}

/// `g(x, Ψ) = Im <0|U(x, Ψ)|0>`.
pub fn g_full(x: f64, psi: &FullPhaseFactors) -> Result<f64> {
    Ok(top_left(x, psi)?.im)
}

/// `g(x, Φ)` for reduced phase factors.
pub fn g(x: f64, phi: &ReducedPhaseFactors) -> Result<f64> {
    g_full(x, &expand_symmetric(phi)?)
}
