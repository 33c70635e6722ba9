//! The factorization identities behind the degree-two products: checked
//! coefficient-by-coefficient at each prime, then again as truncated
//! products at matched cutoffs.
//!
//! ```bash
//! cargo run --release --example euler_identities
//! ```

use num_complex::Complex64;
use ramanujan_euler::{
    build_angles, expand_delta, truncated_product, verify_local_identity, EulerProductSpec,
    LocalIdentity, Sign,
};

fn main() {
    let cutoff = 5_000u64;
    let table = expand_delta(cutoff).unwrap();
    let angles = build_angles(&table, cutoff).unwrap();

    println!("Per-prime coefficient identities over p <= {cutoff}:");
    let mut identities = vec![
        LocalIdentity::ZetaSquares,
        LocalIdentity::ZOnePlus,
        LocalIdentity::Shimura,
    ];
    for m in 2..=6 {
        identities.push(LocalIdentity::SymMinus { m });
        identities.push(LocalIdentity::SymPlus { m });
    }
    for identity in identities {
        let max_err = angles
            .entries()
            .iter()
            .map(|e| {
                verify_local_identity(identity, e.p, &angles)
                    .unwrap()
                    .max_coefficient_error
            })
            .fold(0.0f64, f64::max);
        println!("  {identity:<16} max coefficient error {max_err:.2e}");
    }

    println!("\nTruncated products at matched cutoffs (s = 2):");
    let s = Complex64::new(2.0, 0.0);
    let value = |spec: &EulerProductSpec, at: Complex64| {
        truncated_product(spec, at, cutoff, &angles).unwrap().value()
    };

    let zeta = value(&EulerProductSpec::Zeta, s);
    let z0m = value(&EulerProductSpec::Zpm(0, Sign::Minus), s);
    println!("  product with (1 - p^-s)^-2 factors:  {:.12}", z0m.re);
    println!("  zeta truncation squared:             {:.12}", (zeta * zeta).re);

    let sym1 = value(&EulerProductSpec::Sym(1), s);
    let z1m = value(&EulerProductSpec::Zpm(1, Sign::Minus), s);
    println!("  degree-2 product (sign -, m = 1):    {:.12}", z1m.re);
    println!("  symmetric power m = 1:               {:.12}", sym1.re);

    for m in 2..=4u32 {
        let zm = value(&EulerProductSpec::Zpm(m, Sign::Minus), s);
        let ratio = value(&EulerProductSpec::Sym(m), s) / value(&EulerProductSpec::Sym(m - 2), s);
        println!(
            "  m = {m}: telescoped ratio {:.12} vs direct product {:.12} (rel diff {:.1e})",
            ratio.re,
            zm.re,
            (ratio - zm).norm() / zm.norm()
        );
    }

    // The reported truncation hint falls with the cutoff as expected.
    println!("\nTail hints for the zeta truncation at s = 2:");
    for p in [100u64, 1_000, 5_000] {
        let v = truncated_product(&EulerProductSpec::Zeta, s, p, &angles).unwrap();
        println!(
            "  cutoff {p:>5}: value {:.10}, tail hint {:.2e}",
            v.re, v.tail_hint
        );
    }
}
