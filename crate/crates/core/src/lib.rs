//! Symmetric quantum-signal-processing phase factors by fixed-point
//! iteration.
//!
//! Given Chebyshev coefficients `c` of a real target with definite parity,
//! [`fpi_solve`] finds reduced phase factors `Φ` with `F(Φ) = c`, where `F`
//! maps `Φ` to the Chebyshev coefficients of `g(x, Φ) = Im <0|U(x, Φ)|0>`.
//! The update is `Φ^{t+1} = Φ^t - ½(F(Φ^t) - c)` from `Φ⁰ = 0`, and `F` is
//! evaluated on `2d+1` Chebyshev nodes with one FFT.
//!
//! ```
//! use qsp_fpi::{fpi_solve, ChebyshevCoefficients, Parity, SolverConfig};
//!
//! let c = ChebyshevCoefficients::new(vec![0.2, -0.1, 0.05], Parity::Odd);
//! let report = fpi_solve(&c, &SolverConfig::default()).unwrap();
//! assert!(report.converged);
//! assert!(report.final_residual() <= 1e-12);
//! ```
//!
//! Modules:
//! - [`kernel`]: the QSP unitary `U(x, Ψ)` and `g`.
//! - [`chebyshev`]: node grid, DFT, the forward map `F`, Clenshaw evaluation.
//! - [`bessel`]: `J_k` by backward recurrence and Jacobi–Anger targets.
//! - [`solver`]: the iteration, exact Jacobian columns, second-derivative probes.
//! - [`constants`]: `h`, `H`, `γ` and the convergence radii.
//! - [`analysis`]: tail-decay profiles and pointwise verification.
//! - [`cli`]: target specs, run artifacts, and the `qsp` subcommands.

pub mod analysis;
pub mod bessel;
pub mod chebyshev;
pub mod cli;
pub mod constants;
pub mod error;
pub mod kernel;
pub mod solver;

pub use analysis::{
    check_decay_bound, decay_profile, max_pointwise_error, target_samples_abs_x_cubed,
    DecayProfile,
};
pub use bessel::{bessel_j, bessel_j_sequence, jacobi_anger, JacobiAnger};
pub use chebyshev::{
    coeffs_of_samples, dft_real, forward_map, ChebyshevCoefficients, ForwardMap, NodeGrid,
};
pub use constants::{constants, Constants};
pub use error::{QspError, Result};
pub use kernel::{
    expand_symmetric, g, g_full, qsp_unitary, FullPhaseFactors, Parity, ReducedPhaseFactors,
    Su2Matrix,
};
pub use solver::{
    fpi_solve, fpi_solve_at_len, hessian_entry_norm, jacobian, jacobian_column,
    FixedPointIteration, Guarantee, SolverConfig, SolverReport,
};
