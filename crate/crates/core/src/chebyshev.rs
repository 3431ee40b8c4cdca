//! Chebyshev coefficients, the sampling grid, and the forward map `F`.

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{QspError, Result};
use crate::kernel::{self, expand_symmetric, Parity, ReducedPhaseFactors};

/// Chebyshev coefficients of a function with definite parity.
///
/// `coeffs[j]` multiplies `T_{2j}` (even) or `T_{2j+1}` (odd).
#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevCoefficients {
    coeffs: Vec<f64>,
    parity: Parity,
}

impl ChebyshevCoefficients {
    pub fn new(coeffs: Vec<f64>, parity: Parity) -> Self {
        Self { coeffs, parity }
    }

    pub fn zeros(len: usize, parity: Parity) -> Self {
        Self::new(vec![0.0; len], parity)
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn effective_len(&self) -> usize {
        kernel::effective_len(&self.coeffs)
    }

    /// `Σ|c_j|`, summed in index order.
    pub fn one_norm(&self) -> f64 {
        kernel::one_norm(&self.coeffs)
    }

    pub fn resized(&self, len: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, 0.0);
        Self::new(coeffs, self.parity)
    }

    /// `‖self - other‖₁`, treating missing entries as zero.
    pub fn distance(&self, other: &ChebyshevCoefficients) -> f64 {
        let n = self.len().max(other.len());
        (0..n)
            .map(|j| {
                let a = self.coeffs.get(j).copied().unwrap_or(0.0);
                let b = other.coeffs.get(j).copied().unwrap_or(0.0);
                (a - b).abs()
            })
            .sum()
    }

    /// Coefficients in the full basis `T_0, T_1, …`, zeros at the other parity.
    pub fn to_full_basis(&self) -> Vec<f64> {
        let Some(last) = self.coeffs.len().checked_sub(1) else {
            return Vec::new();
        };
        let mut full = vec![0.0; self.parity.chebyshev_index(last) + 1];
        for (j, &c) in self.coeffs.iter().enumerate() {
            full[self.parity.chebyshev_index(j)] = c;
        }
        full
    }

    /// Evaluates the series at `x` with the Clenshaw recurrence.
    pub fn evaluate(&self, x: f64) -> f64 {
        clenshaw(&self.to_full_basis(), x)
    }
}

/// `Σ a_k T_k(x)` by Clenshaw's recurrence.
pub fn clenshaw(a: &[f64], x: f64) -> f64 {
    let Some((&a0, rest)) = a.split_first() else {
        return 0.0;
    };
    let (mut b1, mut b2) = (0.0, 0.0);
    for &ak in rest.iter().rev() {
        let b0 = 2.0 * x * b1 - b2 + ak;
        b2 = b1;
        b1 = b0;
    }
    a0 + x * b1 - b2
}

/// The `2d+1` nodes `x_j = cos(2πj/(2d+1))`.
///
/// Nodes are computed for `j ≤ d` and mirrored, so `x_j == x_{2d+1-j}`
/// holds exactly and `x_0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeGrid {
    degree: usize,
    nodes: Vec<f64>,
}

impl NodeGrid {
    pub fn new(degree: usize) -> Self {
        let n = 2 * degree + 1;
        let mut nodes = vec![0.0; n];
        for j in 0..=degree {
            let x = (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos();
            nodes[j] = x;
            if j > 0 {
                nodes[n - j] = x;
            }
        }
        Self { degree, nodes }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Samples `f` on every node; each mirrored pair is evaluated once.
    pub fn sample<F: FnMut(f64) -> f64>(&self, mut f: F) -> Vec<f64> {
        let n = self.nodes.len();
        let mut out = vec![0.0; n];
        for j in 0..=self.degree {
            let v = f(self.nodes[j]);
            out[j] = v;
            if j > 0 {
                out[n - j] = v;
            }
        }
        out
    }
}

/// DFT `v_l = Σ_j input_j e^{-2πilj/n}` in `O(n log n)` for any `n`.
pub fn dft_real(input: &[f64]) -> Result<Vec<Complex64>> {
    if input.is_empty() {
        return Err(QspError::EmptyInput);
    }
    let fft = FftPlanner::new().plan_fft_forward(input.len());
    Ok(run_fft(fft.as_ref(), input))
}

fn run_fft(fft: &dyn Fft<f64>, input: &[f64]) -> Vec<Complex64> {
    let mut buf: Vec<Complex64> = input.iter().map(|&r| Complex64::new(r, 0.0)).collect();
    fft.process(&mut buf);
    buf
}

fn extract(v: &[Complex64], parity: Parity) -> ChebyshevCoefficients {
    let n = v.len();
    let d = (n - 1) / 2;
    let scale = 2.0 / n as f64;
    let first = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    let coeffs = (first..=d)
        .step_by(2)
        .map(|l| {
            let c = scale * v[l].re;
            if l == 0 {
                c / 2.0
            } else {
                c
            }
        })
        .collect();
    ChebyshevCoefficients::new(coeffs, parity)
}

/// Chebyshev coefficients from samples on `NodeGrid(d)`.
pub fn coeffs_of_samples(samples: &[f64], parity: Parity) -> Result<ChebyshevCoefficients> {
    if samples.len() % 2 == 0 {
        return Err(QspError::EvenSampleCount(samples.len()));
    }
    Ok(extract(&dft_real(samples)?, parity))
}

/// The forward map at a fixed working length, with the node grid and FFT
/// plan built once. The solver evaluates `F` repeatedly through this.
pub struct ForwardMap {
    len: usize,
    parity: Parity,
    grid: NodeGrid,
    fft: Arc<dyn Fft<f64>>,
}

impl ForwardMap {
    pub fn new(len: usize, parity: Parity) -> Result<Self> {
        if len == 0 && parity == Parity::Odd {
            return Err(QspError::NoDegreesOfFreedom);
        }
        let len = len.max(1);
        let grid = NodeGrid::new(parity.degree_for_len(len));
        let fft = FftPlanner::new().plan_fft_forward(grid.nodes().len());
        Ok(Self { len, parity, grid, fft })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn grid(&self) -> &NodeGrid {
        &self.grid
    }

    /// `F(Φ)`; `phi` is padded or must already fit the working length.
    pub fn apply(&self, phi: &ReducedPhaseFactors) -> Result<ChebyshevCoefficients> {
        if phi.parity() != self.parity {
            return Err(QspError::ParityMismatch("phase factors vs forward map"));
        }
        if phi.effective_len() > self.len {
            return Err(QspError::LengthMismatch {
                left: phi.effective_len(),
                right: self.len,
            });
        }
        let psi = expand_symmetric(&phi.resized(self.len))?;
        let samples = self
            .grid
            .sample(|x| kernel::top_left_unchecked(x, psi.values()).im);
        Ok(extract(&run_fft(self.fft.as_ref(), &samples), self.parity))
    }
}

/// `F(Φ)`: Chebyshev coefficients of `g(·, Φ)` at the working length of `Φ`.
pub fn forward_map(phi: &ReducedPhaseFactors) -> Result<ChebyshevCoefficients> {
    ForwardMap::new(phi.len(), phi.parity())?.apply(phi)
}
