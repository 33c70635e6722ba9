//! Zero clouds: where the local factors 1 +/- f(a(p)) T + T^2 vanish in
//! the s-plane. For the Chebyshev case every zero sits on Re(s) = 0; for
//! any other monic f a positive fraction of primes throws zeros off the
//! axis, at distances shrinking like 1/ln p, so the off-axis cloud crowds
//! toward the axis as the cutoff grows. Also writes scatter SVGs.
//!
//! ```bash
//! cargo run --release --example natural_boundary
//! ```

use ramanujan_euler::svg::scatter_svg;
use ramanujan_euler::{build_angles, cloud_summary, expand_delta, zero_cloud, IntPolynomial, Sign};

fn main() {
    let cutoff = 10_000u64;
    let table = expand_delta(cutoff).unwrap();
    let angles = build_angles(&table, cutoff).unwrap();

    println!("Unitary case f = x: all zeros on the axis.");
    let f: IntPolynomial = "x".parse().unwrap();
    let cloud = zero_cloud(&f, Sign::Minus, cutoff, &angles).unwrap();
    let max_sigma = cloud.iter().map(|p| p.sigma.abs()).fold(0.0f64, f64::max);
    println!(
        "  {} zeros, max |sigma| = {max_sigma:.2e}",
        cloud.len()
    );

    for text in ["x-5", "x^2-1"] {
        let f: IntPolynomial = text.parse().unwrap();
        println!("\nNon-unitary case f = {f}:");
        for p_cut in [1_000u64, 10_000] {
            let cloud = zero_cloud(&f, Sign::Minus, p_cut, &angles).unwrap();
            let summary = cloud_summary(&cloud).unwrap();
            println!(
                "  cutoff {p_cut:>6}: {:>5} off-axis zeros, min positive sigma {:.6}, max sigma {:.4}",
                summary.count_offaxis,
                summary.min_positive_sigma.unwrap(),
                summary.max_sigma
            );
        }
    }

    // Render the clouds side by side.
    for (text, file) in [("x", "cloud_unitary.svg"), ("x^2-1", "cloud_x2_minus_1.svg")] {
        let f: IntPolynomial = text.parse().unwrap();
        let cloud = zero_cloud(&f, Sign::Minus, cutoff, &angles).unwrap();
        let path = std::env::temp_dir().join(file);
        std::fs::write(&path, scatter_svg(&cloud)).unwrap();
        println!("\nwrote {} ({} points)", path.display(), cloud.len());
    }
}
