//! Solve for phase factors of a small odd polynomial and check the result
//! pointwise.
//!
//! cargo run --example solve_coefficients

use qsp_fpi::{fpi_solve, max_pointwise_error, ChebyshevCoefficients, Parity, SolverConfig};

fn main() -> qsp_fpi::Result<()> {
    // 0.4 T_1 - 0.2 T_3 + 0.05 T_5
    let c = ChebyshevCoefficients::new(vec![0.4, -0.2, 0.05], Parity::Odd);
    let report = fpi_solve(&c, &SolverConfig::default())?;

    println!("guarantee: {:?}", report.guarantee);
    for (t, r) in report.residual_history.iter().enumerate() {
        println!("t = {t:2}  residual = {r:.3e}");
    }
    println!("phase factors: {:?}", report.phi.values());
    println!("max pointwise error: {:.3e}", max_pointwise_error(&report.phi, &c)?);
    Ok(())
}
