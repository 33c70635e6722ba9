//! Normalized coefficients a(p) = tau(p) p^{-11/2} in [-2, 2], their
//! angles theta(p) with a(p) = 2 cos(theta(p)), and the empirical angle
//! distribution against the density (2/pi) sin^2(theta).
//!
//! ```bash
//! cargo run --release --example prime_angles
//! ```

use ramanujan_euler::satotate::satotate_cdf;
use ramanujan_euler::{build_angles, expand_delta, satotate_test};

fn main() {
    let cutoff = 20_000u64;
    let table = expand_delta(cutoff).expect("limit in range");
    let angles = build_angles(&table, cutoff).expect("bound holds for every prime");

    println!("Angles for the first primes:");
    println!("  {:>5}  {:>22}  {:>20}", "p", "a(p)", "theta(p)");
    for e in angles.entries().iter().take(10) {
        println!("  {:>5}  {:>22.16}  {:>20.16}", e.p, e.a, e.theta);
    }

    let max_recon = angles
        .entries()
        .iter()
        .map(|e| (e.a - 2.0 * e.theta.cos()).abs())
        .fold(0.0f64, f64::max)
        ;
    println!("\nmax |a(p) - 2 cos(theta(p))| over {} primes: {max_recon:.2e}", angles.entries().len());

    println!("\nDistribution function anchors:");
    for (theta, label) in [
        (0.0, "0"),
        (std::f64::consts::FRAC_PI_2, "pi/2"),
        (std::f64::consts::PI, "pi"),
    ] {
        println!("  F({label}) = {}", satotate_cdf(theta).unwrap());
    }

    let report = satotate_test(&angles, 24).expect("valid binning");
    println!(
        "\nEmpirical vs model on 24 bins ({} primes): sup distance {:.5}",
        report.total, report.sup_distance
    );
    println!("  {:>14}  {:>7}  {:>9}  {:>9}", "bin", "count", "observed", "model");
    for b in &report.bins {
        let observed = b.count as f64 / report.total as f64;
        let bars = "#".repeat((observed * 400.0).round() as usize);
        println!(
            "  [{:4.2}, {:4.2})  {:>7}  {:>9.5}  {:>9.5}  {bars}",
            b.lo, b.hi, b.count, observed, b.model_mass
        );
    }
}
