//! Exact values of the Ramanujan tau function.
//!
//! `tau(n)` is the coefficient of `q^n` in the weight-12 cusp form
//! `q * prod_{n>=1} (1 - q^n)^24`. The expansion starts from the cube of the
//! Euler product, which is sparse:
//!
//! ```text
//! prod (1 - q^n)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}
//! ```
//!
//! and reaches the 24th power by three series squarings (the final shift by
//! `q` is an index shift). The squarings run on machine words (`i64` inputs,
//! `i128` accumulators) whenever an a-priori bound proves they cannot
//! overflow; otherwise they fall back to exact big-integer arithmetic. Both
//! paths produce identical tables and are tested against a direct schoolbook
//! expansion of the product.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::{square_fits_i128, square_i64, PowerSeriesZ};

/// Hard cap on the table limit; a larger request is rejected rather than
/// silently exhausting memory (an i128 series at this length is ~160 MB).
pub const MAX_LIMIT: u64 = 10_000_000;

/// Exact values `tau(1) ..= tau(limit)`.
///
/// Immutable once built; safe to share across threads.
#[derive(Debug, Clone)]
pub struct TauTable {
    values: Vec<BigInt>, // values[n - 1] = tau(n)
    limit: u64,
}

impl TauTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// The stored exact value of `tau(n)` for `1 <= n <= limit`.
    pub fn tau(&self, n: u64) -> Result<&BigInt> {
        if n == 0 || n > self.limit {
            return Err(Error::TauOutOfRange {
                n,
                limit: self.limit,
            });
        }
        Ok(&self.values[(n - 1) as usize])
    }

    /// Iterate `(n, tau(n))` in increasing order of `n`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| (i as u64 + 1, v))
    }

    /// Rebuild a table from already-computed values (used by the cache).
    pub(crate) fn from_values(values: Vec<BigInt>) -> Self {
        let limit = values.len() as u64;
        Self { values, limit }
    }
}

/// Expand the discriminant cusp form up to `q^limit` and tabulate tau.
pub fn expand_delta(limit: u64) -> Result<TauTable> {
    if limit == 0 {
        return Err(Error::ZeroLimit);
    }
    if limit > MAX_LIMIT {
        return Err(Error::LimitTooLarge {
            requested: limit,
            max: MAX_LIMIT,
        });
    }

    // tau(n) is the coefficient of q^{n-1} in prod (1 - q^n)^24, so the
    // 24th power is needed through q^{limit - 1}.
    let len = limit as usize;
    let values = match expand_fast(len) {
        Some(e24) => e24.into_iter().map(BigInt::from).collect(),
        None => expand_bigint(len),
    };
    Ok(TauTable {
        values,
        limit,
    })
}

/// Coefficients of `prod (1 - q^n)^3` through `q^{len-1}`: `(-1)^k (2k+1)`
/// at the triangular indices `k(k+1)/2`.
fn cube_coeffs_i64(len: usize) -> Vec<i64> {
    let mut e3 = vec![0i64; len];
    let mut k: u64 = 0;
    loop {
        let idx = (k * (k + 1) / 2) as usize;
        if idx >= len {
            break;
        }
        let term = (2 * k + 1) as i64;
        e3[idx] = if k % 2 == 0 { term } else { -term };
        k += 1;
    }
    e3
}

/// Machine-word pipeline; returns `None` when any stage could overflow,
/// in which case the caller uses the big-integer pipeline instead.
fn expand_fast(len: usize) -> Option<Vec<i128>> {
    let e3 = cube_coeffs_i64(len);

    // The sixth power via the sparse triangular support of the cube: far
    // fewer multiplications than a dense pass.
    let mut e6 = vec![0i128; len];
    let sparse: Vec<(usize, i64)> = e3
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(i, &v)| (i, v))
        .collect();
    for &(i, vi) in &sparse {
        for &(j, vj) in &sparse {
            if i + j >= len {
                break;
            }
            e6[i + j] += vi as i128 * vj as i128;
        }
    }
    let e6: Vec<i64> = e6
        .into_iter()
        .map(|v| i64::try_from(v).ok())
        .collect::<Option<_>>()?;

    if !square_fits_i128(&e6) {
        return None;
    }
    let e12 = square_i64(&e6);
    let e12: Vec<i64> = e12
        .into_iter()
        .map(|v| i64::try_from(v).ok())
        .collect::<Option<_>>()?;

    if !square_fits_i128(&e12) {
        return None;
    }
    Some(square_i64(&e12))
}

/// Exact big-integer pipeline: same sparse cube, three squarings.
fn expand_bigint(len: usize) -> Vec<BigInt> {
    let order = len - 1;
    let mut e3 = PowerSeriesZ::zero(order);
    for (i, v) in cube_coeffs_i64(len).into_iter().enumerate() {
        if v != 0 {
            e3.set_coeff(i, BigInt::from(v));
        }
    }
    let e6 = e3.square();
    let e12 = e6.square();
    let e24 = e12.square();
    e24.coeffs().to_vec()
}

/// Convert an exact integer to `f64` through a scaled division that keeps
/// at least 64 significant bits before the final rounding: returns
/// `num / den` for `den > 0`.
pub(crate) fn big_ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    debug_assert!(den.sign() == num_bigint::Sign::Plus);
    if num.is_zero() {
        return 0.0;
    }
    let deficit = den.bits() as i64 + 64 - num.bits() as i64;
    let shift = deficit.max(0) as u32;
    let scaled: BigInt = (num << shift) / den;
    let approx = scaled.to_f64().expect("scaled quotient fits f64");
    approx * 2f64.powi(-(shift as i32))
}

/// `sign(x) * sqrt(x^2 / den)` computed with an integer square root on a
/// >=128-bit intermediate, then rounded once to `f64`. Used to normalize
/// tau values against half-integral powers of n.
pub(crate) fn signed_sqrt_ratio(x: &BigInt, den: &BigInt) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let sq = x * x;
    // Aim for ~130 bits in the scaled quotient so the integer square root
    // carries >= 64 significant bits; keep the shift even so the final
    // scaling is an exact power of two.
    let deficit = den.bits() as i64 + 130 - sq.bits() as i64;
    let shift = if deficit > 0 {
        ((deficit + 1) / 2 * 2) as u32
    } else {
        0
    };
    let scaled: BigInt = (sq << shift) / den;
    let root = scaled.sqrt();
    let magnitude = root.to_f64().expect("integer sqrt fits f64") * 2f64.powi(-(shift as i32) / 2);
    if x.sign() == num_bigint::Sign::Minus {
        -magnitude
    } else {
        magnitude
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use num_traits::One;

    /// Independent oracle: expand `q * prod_{n<=limit} (1 - q^n)^24` by
    /// plain schoolbook binomial multiplication, no sparse identities and
    /// no squaring. Returns tau(1)..=tau(limit).
    fn tau_oracle(limit: usize) -> Vec<BigInt> {
        let mut coeffs = vec![BigInt::zero(); limit];
        coeffs[0] = BigInt::one();
        for n in 1..=limit {
            for _ in 0..24 {
                // Multiply by (1 - q^n) in place: c[i] -= c[i - n].
                for i in (n..limit).rev() {
                    let prev = coeffs[i - n].clone();
                    coeffs[i] -= prev;
                }
            }
        }
        coeffs
    }

    #[test]
    fn oracle_matches_frozen_values() {
        // Frozen from the oracle itself: tau(1)..tau(10).
        let expected: [i64; 10] = [
            1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920,
        ];
        let oracle = tau_oracle(10);
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(oracle[i], BigInt::from(*e), "tau({})", i + 1);
        }
    }

    #[test]
    fn limit_one() {
        let t = expand_delta(1).unwrap();
        assert_eq!(t.tau(1).unwrap(), &BigInt::one());
        assert_eq!(t.limit(), 1);
    }

    #[test]
    fn small_table_values() {
        let t = expand_delta(6).unwrap();
        assert_eq!(t.tau(2).unwrap(), &BigInt::from(-24));
        assert_eq!(t.tau(3).unwrap(), &BigInt::from(252));
        assert_eq!(t.tau(4).unwrap(), &BigInt::from(-1472));
        assert_eq!(t.tau(5).unwrap(), &BigInt::from(4830));
        assert_eq!(t.tau(6).unwrap(), &BigInt::from(-6048));
        // Multiplicativity at the first coprime pair.
        assert_eq!(
            t.tau(6).unwrap(),
            &(t.tau(2).unwrap() * t.tau(3).unwrap())
        );
    }

    #[test]
    fn rejects_bad_limits() {
        assert!(matches!(expand_delta(0), Err(Error::ZeroLimit)));
        assert!(matches!(
            expand_delta(MAX_LIMIT + 1),
            Err(Error::LimitTooLarge { .. })
        ));
    }

    #[test]
    fn lookup_errors() {
        let t = expand_delta(10).unwrap();
        assert!(matches!(t.tau(0), Err(Error::TauOutOfRange { .. })));
        assert!(matches!(t.tau(11), Err(Error::TauOutOfRange { .. })));
    }

    #[test]
    fn production_matches_oracle_to_200() {
        let t = expand_delta(200).unwrap();
        let oracle = tau_oracle(200);
        for n in 1..=200u64 {
            assert_eq!(
                t.tau(n).unwrap(),
                &oracle[(n - 1) as usize],
                "tau({n}) disagrees with the schoolbook oracle"
            );
        }
    }

    #[test]
    fn fast_and_bigint_paths_agree() {
        let len = 300;
        let fast = expand_fast(len).expect("fast path applies at this size");
        let slow = expand_bigint(len);
        for i in 0..len {
            assert_eq!(BigInt::from(fast[i]), slow[i], "coefficient {i}");
        }
    }

    #[test]
    fn truncation_stability() {
        let big = expand_delta(500).unwrap();
        let small = expand_delta(123).unwrap();
        for n in 1..=123 {
            assert_eq!(big.tau(n).unwrap(), small.tau(n).unwrap());
        }
    }

    #[test]
    fn multiplicativity_and_prime_square_relation() {
        let limit = 3_000u64;
        let t = expand_delta(limit).unwrap();
        for m in 2..=limit {
            for n in m..=limit / m {
                if m.gcd(&n) == 1 {
                    assert_eq!(
                        t.tau(m * n).unwrap(),
                        &(t.tau(m).unwrap() * t.tau(n).unwrap()),
                        "tau({m} * {n})"
                    );
                }
            }
        }
        for p in crate::primes::primes_up_to(limit.isqrt()) {
            let tau_p = t.tau(p).unwrap();
            let expected = tau_p * tau_p - BigInt::from(p).pow(11);
            assert_eq!(t.tau(p * p).unwrap(), &expected, "tau({p}^2)");
        }
    }

    #[test]
    fn ratio_helpers_are_accurate() {
        // 576 / 2^11 = 0.28125 exactly.
        let v = big_ratio_to_f64(&BigInt::from(576), &BigInt::from(2048));
        assert_eq!(v, 0.28125);
        // sqrt(576 / 2048) with sign: tau(2) * 2^{-11/2}.
        let a = signed_sqrt_ratio(&BigInt::from(-24), &BigInt::from(2048));
        assert!((a * a - 0.28125).abs() < 1e-15);
        assert!(a < 0.0);
        // A tiny numerator keeps full relative precision.
        let tiny = signed_sqrt_ratio(&BigInt::one(), &BigInt::from(10u64).pow(12));
        assert!((tiny - 1e-6).abs() < 1e-18);
    }
}
