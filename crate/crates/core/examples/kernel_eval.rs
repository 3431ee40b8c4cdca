//! Evaluate the QSP unitary for symmetric phase factors.
//!
//! cargo run --example kernel_eval

use qsp_fpi::{expand_symmetric, g, qsp_unitary, Parity, ReducedPhaseFactors};

fn main() -> qsp_fpi::Result<()> {
    let phi = ReducedPhaseFactors::new(vec![0.3, 0.1, -0.2], Parity::Odd);
    let psi = expand_symmetric(&phi)?;
    println!("full phase factors: {:?} (degree {})", psi.values(), psi.degree());

    for x in [-1.0, -0.5, 0.0, 0.5, 1.0] {
        let u = qsp_unitary(x, &psi)?;
        println!(
            "x = {x:5.2}  g = {:+.6}  U00 = {:+.6}{:+.6}i  unitarity defect = {:.1e}",
            g(x, &phi)?,
            u.a.re,
            u.a.im,
            u.unitarity_defect()
        );
    }
    Ok(())
}
