//! The convergence radii and contraction rate, and the functions behind them.
//!
//! cargo run --example constants

use qsp_fpi::constants;

fn main() {
    let k = constants();
    println!("r_phi       = {:.10}", k.r_phi);
    println!("r_c         = {:.10}", k.r_c);
    println!("r_phi_tilde = {:.10}", k.r_phi_tilde);
    println!("r_c_tilde   = {:.10}", k.r_c_tilde);
    println!("gamma_tilde = {:.10}", k.gamma_tilde);
    println!();
    println!("{:>6} {:>12} {:>12} {:>12}", "theta", "H^-1", "C_tilde", "C1(H^-1)");
    for theta in [0.1, 0.3, 0.5, 0.7, 0.85] {
        let r = k.H_inverse(theta).unwrap();
        println!(
            "{theta:>6.2} {r:>12.6} {:>12.6} {:>12.6}",
            k.c_tilde(theta).unwrap(),
            k.c1(r)
        );
    }
}
