//! The sup-norm gate for monic integer polynomials on `[-2, 2]`.
//!
//! A monic `f` of degree `m >= 1` satisfies `|f(x)| <= 2` on `[-2, 2]`
//! exactly when `f = 2 T_m(x/2)`, the dilated Chebyshev polynomial. That
//! makes the unitary branch decidable by exact coefficient equality, and
//! every other monic polynomial owes a witness: an exact rational
//! `x0 in [-2, 2]` with `|f(x0)| > 2`, certified in rational arithmetic.
//!
//! Witness search scans the Chebyshev extremal nodes `2 cos(k pi / m)`
//! first (as nearby rationals), then walks a dyadic subdivision of
//! `[-2, 2]`. Verdicts are never floats: a returned witness carries the
//! exact rational value of `f` there.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Denominator exponent for rational approximations of the extremal nodes.
const NODE_DENOM_BITS: u32 = 24;

/// Depth of the dyadic subdivision: 2^20 subintervals of `[-2, 2]`.
const MAX_DEPTH: u32 = 20;

/// The dilated Chebyshev polynomial `2 T_m(x/2)` as an integer polynomial,
/// via the recurrence `S_0 = 2`, `S_1 = x`, `S_{m+1} = x S_m - S_{m-1}`.
/// Monic for `m >= 1`.
pub fn dilated_chebyshev(m: u32) -> IntPolynomial {
    match m {
        0 => IntPolynomial::from_i64(&[2]),
        1 => IntPolynomial::from_i64(&[0, 1]),
        _ => {
            let mut prev = vec![BigInt::from(2)]; // S_0
            let mut cur = vec![BigInt::zero(), BigInt::one()]; // S_1
            for _ in 2..=m {
                // x * cur - prev
                let mut next = vec![BigInt::zero(); cur.len() + 1];
                for (i, c) in cur.iter().enumerate() {
                    next[i + 1] = c.clone();
                }
                for (i, c) in prev.iter().enumerate() {
                    next[i] -= c;
                }
                prev = cur;
                cur = next;
            }
            IntPolynomial::from_coeffs(cur)
        }
    }
}

/// Verdict of [`classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// `f` equals `2 T_m(x/2)`; the sup of `|f|` on `[-2, 2]` is exactly 2.
    Unitary { degree: u32 },
    /// A certified violation: `|f(witness)| > 2` exactly.
    NonUnitary {
        witness: BigRational,
        value: BigRational,
    },
}

/// Decide whether a monic `f` of degree >= 1 stays within `[-2, 2]` on
/// `[-2, 2]`. Unitary is decided by exact coefficient equality with the
/// dilated Chebyshev polynomial; otherwise the returned witness certifies
/// the violation in exact rational arithmetic.
pub fn classify(f: &IntPolynomial) -> Result<Classification> {
    check_classifier_input(f)?;
    let m = f.degree() as u32;
    if *f == dilated_chebyshev(m) {
        return Ok(Classification::Unitary { degree: m });
    }
    match witness_search(f)? {
        Some((witness, value)) => Ok(Classification::NonUnitary { witness, value }),
        None => Err(Error::WitnessExhausted {
            subintervals: 1 << MAX_DEPTH,
        }),
    }
}

/// Search for an exact rational `x0 in [-2, 2]` with `|f(x0)| > 2`.
///
/// Scans the extremal nodes first and picks the node with the largest
/// violation (ties broken toward larger `x0`), then subdivides `[-2, 2]`
/// dyadically until a violation appears or `2^20` subintervals are
/// exhausted. Returns `None` only for the dilated Chebyshev polynomial
/// itself (any other outcome is an inconsistency the caller reports).
pub fn witness_search(f: &IntPolynomial) -> Result<Option<(BigRational, BigRational)>> {
    check_classifier_input(f)?;
    let m = f.degree() as u32;

    // Extremal nodes 2 cos(k pi / m), k = 0..=m, as nearby rationals.
    let mut best: Option<(BigRational, BigRational)> = None;
    for k in 0..=m {
        let (a, s) = node_dyadic(k, m);
        if let Some((x, value)) = violation_at_dyadic(f, &a, s) {
            let better = match &best {
                None => true,
                Some((bx, bv)) => {
                    let (va, ba) = (value.abs(), bv.abs());
                    va > ba || (va == ba && x > *bx)
                }
            };
            if better {
                best = Some((x, value));
            }
        }
    }
    if best.is_some() {
        return Ok(best);
    }

    // Dyadic refinement: test midpoints level by level so each point is
    // evaluated once. Depth d has spacing 4 / 2^d.
    for depth in 1..=MAX_DEPTH {
        let mut j: u64 = 1;
        while j < (1 << depth) {
            // x = -2 + 4 j / 2^depth, odd j only (even j seen earlier).
            let a = BigInt::from(4 * j) - BigInt::from(2u64 << depth);
            if let Some(hit) = violation_at_dyadic(f, &a, depth) {
                return Ok(Some(hit));
            }
            j += 2;
        }
    }
    Ok(None)
}

/// Exact violation check at `x = a / 2^s` using only integer arithmetic:
/// `|f(x)| > 2` iff `|sum_i c_i a^i 2^{s(m-i)}| > 2^{sm+1}`. On violation
/// returns the reduced rational witness and the exact value of `f` there.
fn violation_at_dyadic(
    f: &IntPolynomial,
    a: &BigInt,
    s: u32,
) -> Option<(BigRational, BigRational)> {
    let m = f.degree();
    let mut acc = f.coeff(m);
    for i in (0..m).rev() {
        acc = acc * a + (f.coeff(i) << (s as usize * (m - i)));
    }
    let bound: BigInt = BigInt::one() << (s as usize * m + 1);
    if acc.abs() > bound {
        let x = BigRational::new(a.clone(), BigInt::one() << s as usize);
        let value = BigRational::new(acc, BigInt::one() << (s as usize * m));
        Some((x, value))
    } else {
        None
    }
}

fn check_classifier_input(f: &IntPolynomial) -> Result<()> {
    if f.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NotMonic {
            leading: f.leading().to_string(),
        });
    }
    Ok(())
}

/// The extremal node `2 cos(k pi / m)` as a dyadic pair `(a, s)` meaning
/// `a / 2^s`: exact at the endpoints and the center, rounded to `2^-24`
/// elsewhere.
fn node_dyadic(k: u32, m: u32) -> (BigInt, u32) {
    if k == 0 {
        return (BigInt::from(2), 0);
    }
    if k == m {
        return (BigInt::from(-2), 0);
    }
    if 2 * k == m {
        return (BigInt::zero(), 0);
    }
    let x = 2.0 * (k as f64 * std::f64::consts::PI / m as f64).cos();
    let scale = (1u64 << NODE_DENOM_BITS) as f64;
    (BigInt::from((x * scale).round() as i64), NODE_DENOM_BITS)
}
