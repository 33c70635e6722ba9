//! Exact truncated integer power series.
//!
//! [`PowerSeriesZ`] stores arbitrary-precision coefficients of `q^0 ..= q^N`
//! for a fixed truncation order `N` and multiplies exactly. Multiplication
//! dispatches on size: schoolbook up to 20 000 coefficients, Karatsuba above,
//! and both paths are tested against each other.
//!
//! The module also exposes machine-word kernels ([`square_i64`],
//! [`square_fits_i128`]) used by the fast tau expansion: inputs are `i64`
//! series whose truncated square provably fits in `i128`. The fit check is
//! an a-priori bound on `len * max|coeff|^2`, so the kernels can never wrap.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

/// Result sizes up to this many coefficients use schoolbook multiplication.
const SCHOOLBOOK_MAX: usize = 20_000;

/// Base-case size for the Karatsuba recursion.
const KARATSUBA_BASE: usize = 512;

/// A power series over the integers truncated at a fixed order.
///
/// `coeffs[i]` is the coefficient of `q^i`; the length is always
/// `truncation_order + 1`. Arithmetic requires both operands to share the
/// same truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeriesZ {
    coeffs: Vec<BigInt>,
}

impl PowerSeriesZ {
    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series 1 truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Wrap explicit coefficients; the truncation order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least q^0");
        Self { coeffs }
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, i: usize, value: BigInt) {
        self.coeffs[i] = value;
    }

    /// Exact product truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.truncation_order(),
            rhs.truncation_order(),
            "series arithmetic requires equal truncation orders"
        );
        let n = self.coeffs.len();
        let coeffs = if n <= SCHOOLBOOK_MAX {
            mul_schoolbook(&self.coeffs, &rhs.coeffs, n)
        } else {
            let mut full = mul_karatsuba(&self.coeffs, &rhs.coeffs);
            full.truncate(n);
            full.resize(n, BigInt::zero());
            full
        };
        Self { coeffs }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }
}

/// Truncated schoolbook product of the low `n` coefficients.
fn mul_schoolbook(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    for (i, ai) in a.iter().enumerate().take(n) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Full (untruncated) Karatsuba product; length `a.len() + b.len() - 1`.
fn mul_karatsuba(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    if n <= KARATSUBA_BASE {
        return mul_schoolbook_full(a, b);
    }
    let half = n / 2;
    let (a0, a1) = split(a, half);
    let (b0, b1) = split(b, half);

    let low = mul_karatsuba(a0, b0);
    let high = mul_karatsuba(a1, b1);
    let a_sum = add_slices(a0, a1);
    let b_sum = add_slices(b0, b1);
    let mut mid = mul_karatsuba(&a_sum, &b_sum);
    for (m, l) in mid.iter_mut().zip(low.iter()) {
        *m -= l;
    }
    for (m, h) in mid.iter_mut().zip(high.iter()) {
        *m -= h;
    }

    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, v) in low.into_iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in mid.into_iter().enumerate() {
        if !v.is_zero() {
            out[i + half] += v;
        }
    }
    for (i, v) in high.into_iter().enumerate() {
        if !v.is_zero() {
            out[i + 2 * half] += v;
        }
    }
    out
}

fn mul_schoolbook_full(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![BigInt::zero()];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn split(s: &[BigInt], at: usize) -> (&[BigInt], &[BigInt]) {
    if s.len() <= at {
        (s, &[])
    } else {
        s.split_at(at)
    }
}

fn add_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (o, v) in out.iter_mut().zip(a.iter()) {
        *o += v;
    }
    for (o, v) in out.iter_mut().zip(b.iter()) {
        *o += v;
    }
    out
}

/// Whether the truncated square of `a` is guaranteed to fit every `i128`
/// accumulator: `(len + 2) * max|a_i|^2` must stay below `i128::MAX / 2`.
pub fn square_fits_i128(a: &[i64]) -> bool {
    let max = a.iter().map(|&v| v.unsigned_abs()).max().unwrap_or(0) as u128;
    let budget = (i128::MAX as u128) / 2;
    match max.checked_mul(max) {
        Some(sq) => match sq.checked_mul(a.len() as u128 + 2) {
            Some(total) => total <= budget,
            None => false,
        },
        None => false,
    }
}

/// Truncated square with exact `i128` accumulation, parallel over output
/// coefficients. Caller must have checked [`square_fits_i128`].
pub fn square_i64(a: &[i64]) -> Vec<i128> {
    debug_assert!(square_fits_i128(a));
    let len = a.len();
    (0..len)
        .into_par_iter()
        .map(|n| {
            let mut acc: i128 = 0;
            let half = n / 2;
            for i in 0..half {
                acc += a[i] as i128 * a[n - i] as i128;
            }
            acc *= 2;
            if n % 2 == 0 {
                acc += a[half] as i128 * a[half] as i128;
            } else {
                acc += 2 * (a[half] as i128 * a[n - half] as i128);
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn series_from_i64(v: &[i64]) -> PowerSeriesZ {
        PowerSeriesZ::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn one_is_identity() {
        let a = series_from_i64(&[3, -1, 4, 1, -5, 9]);
        let one = PowerSeriesZ::one(5);
        assert_eq!(a.mul(&one), a);
    }

    #[test]
    fn truncates_at_order() {
        // (1 + q)^2 truncated at order 1 keeps only 1 + 2q.
        let a = series_from_i64(&[1, 1]);
        assert_eq!(a.square(), series_from_i64(&[1, 2]));
    }

    #[test]
    #[should_panic(expected = "equal truncation orders")]
    fn rejects_mismatched_orders() {
        let a = series_from_i64(&[1, 1]);
        let b = series_from_i64(&[1, 1, 1]);
        let _ = a.mul(&b);
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        // Deterministic pseudo-random coefficients, exercised well past the
        // Karatsuba base size via the internal full-product routine.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 2001) as i64 - 1000
        };
        let a: Vec<BigInt> = (0..1500).map(|_| BigInt::from(next())).collect();
        let b: Vec<BigInt> = (0..1500).map(|_| BigInt::from(next())).collect();
        assert_eq!(mul_karatsuba(&a, &b), mul_schoolbook_full(&a, &b));
    }

    #[test]
    fn i64_square_matches_bigint_square() {
        let vals: Vec<i64> = (0..600).map(|i| ((i * i * 37) % 5001) as i64 - 2500).collect();
        assert!(square_fits_i128(&vals));
        let fast = square_i64(&vals);
        let slow = series_from_i64(&vals).square();
        for (i, f) in fast.iter().enumerate() {
            assert_eq!(BigInt::from(*f), *slow.coeff(i), "coefficient {i}");
        }
    }

    #[test]
    fn fit_check_rejects_huge_inputs() {
        assert!(!square_fits_i128(&[i64::MAX, i64::MAX]));
        assert!(square_fits_i128(&[0; 4]));
        assert!(square_fits_i128(&[1 << 30; 1024]));
    }

    proptest! {
        #[test]
        fn mul_commutes(a in prop::collection::vec(-50i64..50, 1..40),
                        b in prop::collection::vec(-50i64..50, 1..40)) {
            let n = a.len().min(b.len());
            let x = series_from_i64(&a[..n]);
            let y = series_from_i64(&b[..n]);
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }

        #[test]
        fn mul_is_associative(a in prop::collection::vec(-9i64..9, 1..20),
                              b in prop::collection::vec(-9i64..9, 1..20),
                              c in prop::collection::vec(-9i64..9, 1..20)) {
            let n = a.len().min(b.len()).min(c.len());
            let x = series_from_i64(&a[..n]);
            let y = series_from_i64(&b[..n]);
            let z = series_from_i64(&c[..n]);
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }

        #[test]
        fn square_i64_agrees_with_exact(v in prop::collection::vec(-10_000i64..10_000, 1..80)) {
            prop_assume!(square_fits_i128(&v));
            let fast = square_i64(&v);
            let slow = series_from_i64(&v).square();
            for (i, f) in fast.iter().enumerate() {
                prop_assert_eq!(BigInt::from(*f), slow.coeff(i).clone());
            }
        }
    }
}
