//! Exact Jacobian columns of F against finite differences, and the distance
//! of DF(Φ) from 2I.
//!
//! cargo run --example jacobian_check

use qsp_fpi::constants::h;
use qsp_fpi::solver::column_sum_norm;
use qsp_fpi::{forward_map, jacobian, Parity, ReducedPhaseFactors};

fn main() -> qsp_fpi::Result<()> {
    let phi = ReducedPhaseFactors::new(vec![0.2, -0.1, 0.15, 0.05], Parity::Even);
    let jac = jacobian(&phi)?;

    let step = 1e-6;
    let mut worst: f64 = 0.0;
    for (k, col) in jac.iter().enumerate() {
        let mut plus = phi.clone();
        plus.values_mut()[k] += step;
        let mut minus = phi.clone();
        minus.values_mut()[k] -= step;
        let (fp, fm) = (forward_map(&plus)?, forward_map(&minus)?);
        for (j, exact) in col.iter().enumerate() {
            let fd = (fp.coeffs()[j] - fm.coeffs()[j]) / (2.0 * step);
            worst = worst.max((exact - fd).abs());
        }
    }
    println!("max |exact - finite difference| = {worst:.2e}");

    let mut shifted = jac.clone();
    for (k, col) in shifted.iter_mut().enumerate() {
        col[k] -= 2.0;
    }
    println!(
        "|DF - 2I|_1 = {:.6} <= h(|phi|_1) = {:.6}",
        column_sum_norm(&shifted),
        h(phi.one_norm())
    );
    Ok(())
}
