//! Phase factors for e^{iτx} split into its cos and sin parts.
//!
//! cargo run --release --example hamiltonian_simulation -- 1000

use std::time::Instant;

use qsp_fpi::{fpi_solve, jacobi_anger, SolverConfig};

fn main() -> qsp_fpi::Result<()> {
    let tau: f64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("tau must be a number"))
        .unwrap_or(100.0);
    let ja = jacobi_anger(tau, 1e-14, 0.5)?;
    println!("tau = {tau}, degree = {}", ja.degree);

    for (name, c) in [("cos", &ja.even), ("sin", &ja.odd)] {
        let start = Instant::now();
        let report = fpi_solve(c, &SolverConfig::default())?;
        println!(
            "{name}: |c|_1 = {:.6}, {} iterations, residual {:.2e}, {:.3} s",
            c.one_norm(),
            report.iterations,
            report.final_residual(),
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}
