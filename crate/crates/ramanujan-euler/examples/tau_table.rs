//! Exact tau values from the product expansion, with the two structural
//! identities that make the function famous: multiplicativity on coprime
//! arguments and the prime-square recursion tau(p^2) = tau(p)^2 - p^11.
//!
//! ```bash
//! cargo run --release --example tau_table
//! ```

use num_bigint::BigInt;
use ramanujan_euler::{expand_delta, primes::primes_up_to};

fn main() {
    let limit = 10_000u64;
    let table = expand_delta(limit).expect("limit is in range");

    println!("First values of tau:");
    for n in 1..=12u64 {
        println!("  tau({n:>2}) = {}", table.tau(n).unwrap());
    }

    println!("\nLarge values stay exact (they long overflow 64 bits):");
    for n in [1_000u64, 9_999, 10_000] {
        println!("  tau({n}) = {}", table.tau(n).unwrap());
    }

    println!("\nMultiplicativity on coprime pairs:");
    for (m, n) in [(2u64, 3u64), (4, 25), (99, 101)] {
        let lhs = table.tau(m * n).unwrap();
        let rhs = table.tau(m).unwrap() * table.tau(n).unwrap();
        println!(
            "  tau({m} * {n}) = tau({m}) tau({n})  ->  {}",
            if *lhs == rhs { "holds" } else { "BROKEN" }
        );
        assert_eq!(*lhs, rhs);
    }

    println!("\nPrime-square recursion tau(p^2) = tau(p)^2 - p^11:");
    for p in primes_up_to(20) {
        let lhs = table.tau(p * p).unwrap();
        let rhs = table.tau(p).unwrap().pow(2) - BigInt::from(p).pow(11);
        println!(
            "  p = {p:>2}: tau({}) = {lhs}  ->  {}",
            p * p,
            if *lhs == rhs { "holds" } else { "BROKEN" }
        );
        assert_eq!(*lhs, rhs);
    }
}
