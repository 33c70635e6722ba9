//! Expanding Euler products into Dirichlet series coefficients, and the
//! cross-check that ties the whole pipeline together: the degree-two
//! product over angles reproduces tau(n) n^{-11/2} for every n.
//!
//! ```bash
//! cargo run --release --example dirichlet_coefficients
//! ```

use ramanujan_euler::satotate::normalize;
use ramanujan_euler::{build_angles, dirichlet_expand, expand_delta, EulerProductSpec, Sign};

fn main() {
    let table = expand_delta(1_000).unwrap();
    let angles = build_angles(&table, 1_000).unwrap();

    println!("Coefficients of the degree-2 product vs normalized tau:");
    println!("  {:>4}  {:>22}  {:>22}", "n", "c(n)", "tau(n) n^(-11/2)");
    let coeffs = dirichlet_expand(&EulerProductSpec::Sym(1), 100, &angles).unwrap();
    let mut max_err = 0.0f64;
    for n in 1..=100u64 {
        let want = normalize(table.tau(n).unwrap(), n);
        max_err = max_err.max((coeffs[n as usize] - want).abs());
        if n <= 12 {
            println!("  {n:>4}  {:>22.16}  {want:>22.16}", coeffs[n as usize]);
        }
    }
    println!("  ... max |difference| over n <= 100: {max_err:.2e}");

    println!("\nThe zeta expansion is the constant sequence 1:");
    let ones = dirichlet_expand(&EulerProductSpec::Zeta, 20, &angles).unwrap();
    println!("  c(1..20) = {:?}", &ones[1..=20].iter().map(|c| c.round()).collect::<Vec<_>>());

    println!("\nHecke recursion at prime powers, c(p^(k+1)) = a(p) c(p^k) - c(p^(k-1)):");
    let coeffs = dirichlet_expand(&EulerProductSpec::Sym(1), 1_000, &angles).unwrap();
    for p in [2u64, 3, 5] {
        let a = angles.angle(p).unwrap().a;
        let mut history = vec![1.0, coeffs[p as usize]];
        let mut pk = p * p;
        while pk <= 1_000 {
            let k = history.len();
            let predicted = a * history[k - 1] - history[k - 2];
            let actual = coeffs[pk as usize];
            println!(
                "  p = {p}: c({pk:>4}) = {actual:>11.7}, recursion gives {predicted:>11.7}"
            );
            history.push(actual);
            pk *= p;
        }
    }

    println!("\nA sign flip expands the reciprocal family instead:");
    let flipped = dirichlet_expand(&EulerProductSpec::Zpm(1, Sign::Plus), 12, &angles).unwrap();
    println!("  c(1..12) for the plus sign: {:?}", &flipped[1..=12]);
}
