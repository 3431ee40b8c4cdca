//! Tail decay of the coefficients and phase factors of 0.8|x|³.
//!
//! cargo run --release --example decay_abs_x_cubed

use qsp_fpi::{
    check_decay_bound, decay_profile, fpi_solve, target_samples_abs_x_cubed, SolverConfig,
};

fn main() -> qsp_fpi::Result<()> {
    let c = target_samples_abs_x_cubed(0.8, 1000);
    let report = fpi_solve(&c, &SolverConfig::default())?;
    let profile = decay_profile(&c, &report.phi)?;

    println!("|c|_1 = {:.6}, {} iterations", profile.c_one_norm, report.iterations);
    println!("decay constant C = {:?}", profile.decay_constant);
    println!("tail bound holds for every n: {}", check_decay_bound(&profile)?);
    println!("fitted slope of |c_k|:   {:?}", profile.fitted_rate_c);
    println!("fitted slope of |phi_k|: {:?}", profile.fitted_rate_phi);
    for n in [10, 50, 100, 500] {
        println!(
            "n = {n:4}: tail_c = {:.3e}, tail_phi = {:.3e}",
            profile.tail_sums_c[n], profile.tail_sums_phi[n]
        );
    }
    Ok(())
}
