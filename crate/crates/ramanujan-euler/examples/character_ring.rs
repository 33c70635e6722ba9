//! Exact arithmetic with SU(2) virtual characters: Clebsch-Gordan
//! products, decomposition of f(2 cos theta) into irreducibles, and the
//! unitarity test for degree-two families 1 +/- h T + T^2.
//!
//! ```bash
//! cargo run --release --example character_ring
//! ```

use ramanujan_euler::characters::{cos_character, VirtualCharacter};
use ramanujan_euler::{
    from_polynomial, unitarity_test, DegreeTwoFamily, IntPolynomial, Sign, UnitarityVerdict,
};

fn main() {
    println!("Clebsch-Gordan products:");
    for (a, b) in [(1u32, 1u32), (1, 2), (2, 2), (3, 4)] {
        let product = VirtualCharacter::irreducible(a).mul(&VirtualCharacter::irreducible(b));
        println!("  chi_{a} * chi_{b} = {product}");
    }

    println!("\nPolynomials in chi_1 (so pointwise in 2 cos theta):");
    for text in ["x", "x^2-2", "x^3-3x", "x^4-4x^2+2", "x^2+1", "x^3"] {
        let f: IntPolynomial = text.parse().unwrap();
        println!("  {f} = {}", from_polynomial(&f));
    }

    println!("\n2 cos(m theta) as characters:");
    for m in 0..=6u32 {
        println!("  m = {m}: {}", cos_character(m));
    }

    println!("\nUnitarity of 1 - h T + T^2 (max of |h| on [0, pi] vs 2):");
    for text in ["x", "x^2-2", "x^2-1", "x^2+1", "x^3-3x", "x^3-2x", "x-5"] {
        let f: IntPolynomial = text.parse().unwrap();
        let family = DegreeTwoFamily {
            sign: Sign::Minus,
            h: from_polynomial(&f),
        };
        match unitarity_test(&family, 4096).unwrap() {
            UnitarityVerdict::Unitary => println!("  h = f(2cos theta), f = {f}: unitary"),
            UnitarityVerdict::NonUnitary { theta, value } => println!(
                "  h = f(2cos theta), f = {f}: NOT unitary, |h({theta:.4})| = {:.4}",
                value.abs()
            ),
            UnitarityVerdict::BoundaryAmbiguous { value, .. } => println!(
                "  h = f(2cos theta), f = {f}: ambiguous at max {value:.12}"
            ),
        }
    }
}
