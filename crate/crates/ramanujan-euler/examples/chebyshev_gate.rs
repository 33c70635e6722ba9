//! The sup-norm gate: a monic integer polynomial of degree m is bounded by
//! 2 on [-2, 2] exactly when it is the dilated Chebyshev polynomial
//! 2 T_m(x/2). Everything else gets an exact rational witness.
//!
//! ```bash
//! cargo run --release --example chebyshev_gate
//! ```

use ramanujan_euler::{classify, dilated_chebyshev, witness_search, Classification, IntPolynomial};

fn main() {
    println!("Dilated Chebyshev polynomials 2 T_m(x/2):");
    for m in 0..=8u32 {
        println!("  m = {m}: {}", dilated_chebyshev(m));
    }

    println!("\nClassification of monic polynomials:");
    for text in [
        "x",
        "x-5",
        "x^2-2",
        "x^2-1",
        "x^2-3",
        "x^3-3x",
        "x^3-3x+1",
        "x^4-4x^2+2",
        "x^4-4x^2+3",
    ] {
        let f: IntPolynomial = text.parse().unwrap();
        match classify(&f).unwrap() {
            Classification::Unitary { degree } => {
                println!("  {f}: UNITARY (equals 2 T_{degree}(x/2))")
            }
            Classification::NonUnitary { witness, value } => {
                println!("  {f}: NON-UNITARY, |f({witness})| = |{value}| > 2")
            }
        }
    }

    println!("\nWitness search on its own:");
    for text in ["x^2-1", "x^3", "x^2-2"] {
        let f: IntPolynomial = text.parse().unwrap();
        match witness_search(&f).unwrap() {
            Some((x, v)) => println!("  {f}: f({x}) = {v}"),
            None => println!("  {f}: none found (the Chebyshev case)"),
        }
    }

    // The witness is a certificate: re-evaluate it exactly.
    let f: IntPolynomial = "x^4-4x^2+3".parse().unwrap();
    if let Classification::NonUnitary { witness, value } = classify(&f).unwrap() {
        assert_eq!(f.eval_rational(&witness), value);
        println!("\nRe-evaluated the witness for {f} exactly: certified.");
    }
}
