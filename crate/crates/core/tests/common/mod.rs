//! Independent oracles shared by the integration tests. Nothing here goes
//! through the node grid, the FFT, or the recurrence it is checking.

#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;
use qsp_fpi::{ChebyshevCoefficients, Parity, ReducedPhaseFactors};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random vector of length `n` rescaled to ℓ¹ norm `norm`.
pub fn random_with_norm(rng: &mut ChaCha8Rng, n: usize, norm: f64) -> Vec<f64> {
    let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let s: f64 = v.iter().map(|x| x.abs()).sum();
    v.into_iter().map(|x| x * norm / s).collect()
}

pub fn random_parity(rng: &mut ChaCha8Rng) -> Parity {
    if rng.gen_bool(0.5) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

pub fn l1(v: &[f64]) -> f64 {
    v.iter().map(|x| x.abs()).sum()
}

pub fn l1_dist(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0.0) - b.get(i).copied().unwrap_or(0.0)).abs())
        .sum()
}

// ---------------------------------------------------------------------------
// Symbolic Chebyshev-basis algebra for the 2×2 matrix product.
// ---------------------------------------------------------------------------

/// `Σ a_k T_k(x)` with complex coefficients.
#[derive(Clone, Debug)]
pub struct ChebPoly(pub Vec<Complex64>);

impl ChebPoly {
    pub fn zero() -> Self {
        ChebPoly(vec![])
    }

    pub fn constant(z: Complex64) -> Self {
        ChebPoly(vec![z])
    }

    pub fn add(&self, o: &ChebPoly) -> ChebPoly {
        let n = self.0.len().max(o.0.len());
        let get = |p: &ChebPoly, i: usize| p.0.get(i).copied().unwrap_or_default();
        ChebPoly((0..n).map(|i| get(self, i) + get(o, i)).collect())
    }

    /// Uses `T_m T_n = ½(T_{m+n} + T_{|m-n|})`.
    pub fn mul(&self, o: &ChebPoly) -> ChebPoly {
        if self.0.is_empty() || o.0.is_empty() {
            return ChebPoly::zero();
        }
        let mut out = vec![Complex64::default(); self.0.len() + o.0.len() - 1];
        for (m, a) in self.0.iter().enumerate() {
            for (n, b) in o.0.iter().enumerate() {
                let p = a * b * 0.5;
                out[m + n] += p;
                out[m.abs_diff(n)] += p;
            }
        }
        ChebPoly(out)
    }
}

/// `A(x) + √(1-x²) B(x)`.
#[derive(Clone, Debug)]
pub struct SqrtPoly {
    pub a: ChebPoly,
    pub b: ChebPoly,
}

impl SqrtPoly {
    fn zero() -> Self {
        SqrtPoly { a: ChebPoly::zero(), b: ChebPoly::zero() }
    }

    fn add(&self, o: &SqrtPoly) -> SqrtPoly {
        SqrtPoly { a: self.a.add(&o.a), b: self.b.add(&o.b) }
    }

    /// `(A₁ + sB₁)(A₂ + sB₂)` with `s² = 1 - x² = ½T_0 - ½T_2`.
    fn mul(&self, o: &SqrtPoly) -> SqrtPoly {
        let half = Complex64::new(0.5, 0.0);
        let s2 = ChebPoly(vec![half, Complex64::default(), -half]);
        SqrtPoly {
            a: self.a.mul(&o.a).add(&s2.mul(&self.b.mul(&o.b))),
            b: self.a.mul(&o.b).add(&self.b.mul(&o.a)),
        }
    }
}

type SymMatrix = [[SqrtPoly; 2]; 2];

fn sym_mul(l: &SymMatrix, r: &SymMatrix) -> SymMatrix {
    let e = |i: usize, j: usize| l[i][0].mul(&r[0][j]).add(&l[i][1].mul(&r[1][j]));
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn sym_phase(psi: f64) -> SymMatrix {
    let c = |z: Complex64| SqrtPoly { a: ChebPoly::constant(z), b: ChebPoly::zero() };
    [
        [c(Complex64::cis(psi)), SqrtPoly::zero()],
        [SqrtPoly::zero(), c(Complex64::cis(-psi))],
    ]
}

fn sym_signal() -> SymMatrix {
    let x = SqrtPoly {
        a: ChebPoly(vec![Complex64::default(), Complex64::new(1.0, 0.0)]),
        b: ChebPoly::zero(),
    };
    let is = SqrtPoly { a: ChebPoly::zero(), b: ChebPoly::constant(Complex64::new(0.0, 1.0)) };
    [[x.clone(), is.clone()], [is, x]]
}

/// Full-basis Chebyshev coefficients of `g(·, Ψ)` by symbolic expansion of
/// the matrix product. Also returns the largest `√(1-x²)` component of the
/// top-left entry, which must vanish.
pub fn symbolic_g_full(psi: &[f64]) -> (Vec<f64>, f64) {
    let mut m = sym_phase(psi[0]);
    for &p in &psi[1..] {
        m = sym_mul(&sym_mul(&m, &sym_signal()), &sym_phase(p));
    }
    let top = &m[0][0];
    let residue = top.b.0.iter().map(|z| z.norm()).fold(0.0, f64::max);
    (top.a.0.iter().map(|z| z.im).collect(), residue)
}

/// Symmetric expansion written out independently of the library.
pub fn expand_reduced(phi: &[f64], parity: Parity) -> Vec<f64> {
    let n = phi.len();
    match parity {
        Parity::Even => {
            let mut full: Vec<f64> = (1..n).rev().map(|j| phi[j]).collect();
            full.push(2.0 * phi[0]);
            full.extend((1..n).map(|j| phi[j]));
            full
        }
        Parity::Odd => {
            let mut full: Vec<f64> = (0..n).rev().map(|j| phi[j]).collect();
            full.extend((0..n).map(|j| phi[j]));
            full
        }
    }
}

/// `F(Φ)` by symbolic expansion: the parity-matching coefficients of
/// `g(·, Φ)` for indices up to the full degree.
pub fn symbolic_forward_map(phi: &ReducedPhaseFactors) -> Vec<f64> {
    let (full, _) = symbolic_g_full(&expand_reduced(phi.values(), phi.parity()));
    let first = match phi.parity() {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    (0..phi.len())
        .map(|j| full.get(first + 2 * j).copied().unwrap_or(0.0))
        .collect()
}

// ---------------------------------------------------------------------------
// Other oracles
// ---------------------------------------------------------------------------

/// `Σ_j input_j e^{-2πilj/n}` summed directly.
pub fn direct_dft(input: &[f64]) -> Vec<Complex64> {
    let n = input.len();
    (0..n)
        .map(|l| {
            input
                .iter()
                .enumerate()
                .map(|(j, &v)| v * Complex64::cis(-2.0 * PI * ((l * j) % n) as f64 / n as f64))
                .sum()
        })
        .collect()
}

/// `J_n(x) = (1/2π)∫₀^{2π} cos(nθ - x sinθ) dθ` by the trapezoid rule,
/// which is spectrally accurate for this periodic integrand.
pub fn bessel_trapezoid(n: usize, x: f64) -> f64 {
    let m = 2 * (x.ceil() as usize + n) + 64;
    let h = 2.0 * PI / m as f64;
    (0..m)
        .map(|i| {
            let t = i as f64 * h;
            (n as f64 * t - x * t.sin()).cos()
        })
        .sum::<f64>()
        / m as f64
}

/// Central difference `(F(Φ + h e_k) - F(Φ - h e_k)) / 2h`.
pub fn central_difference(
    f: impl Fn(&ReducedPhaseFactors) -> ChebyshevCoefficients,
    phi: &ReducedPhaseFactors,
    k: usize,
    h: f64,
) -> Vec<f64> {
    let mut plus = phi.clone();
    plus.values_mut()[k] += h;
    let mut minus = phi.clone();
    minus.values_mut()[k] -= h;
    let fp = f(&plus);
    let fm = f(&minus);
    fp.coeffs()
        .iter()
        .zip(fm.coeffs())
        .map(|(a, b)| (a - b) / (2.0 * h))
        .collect()
}

/// Chebyshev coefficient of `T_n` in `|x|³`, for even `n`:
/// `(2/π)∫₀^π |cos θ|³ cos nθ dθ` with `cos³θ = (3cosθ + cos3θ)/4`.
pub fn abs_x_cubed_coefficient(n: usize) -> f64 {
    // ∫₀^{π/2} cos(mθ) cos(nθ) dθ
    let half_integral = |m: i64, n: i64| -> f64 {
        let part = |k: i64| -> f64 {
            if k == 0 {
                PI / 2.0
            } else {
                (k as f64 * PI / 2.0).sin() / k as f64
            }
        };
        0.5 * (part(m - n) + part(m + n))
    };
    let n = n as i64;
    let integral = 2.0 * (0.75 * half_integral(1, n) + 0.25 * half_integral(3, n));
    let scale = if n == 0 { 1.0 / PI } else { 2.0 / PI };
    scale * integral
}
