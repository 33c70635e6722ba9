//! Normalized coefficients, angles, and the empirical angle distribution.
//!
//! For each prime the exact integer `tau(p)` is normalized to
//! `a(p) = tau(p) * p^{-11/2}`, which lies in `[-2, 2]`, and to the unique
//! angle `theta(p)` in `[0, pi]` with `a(p) = 2 cos(theta(p))`. The angles
//! are tested empirically against the distribution with density
//! `(2/pi) sin^2(theta)`.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::primes::primes_up_to;
use crate::tau::{big_ratio_to_f64, signed_sqrt_ratio, TauTable};

/// Tolerance above 2 at which a normalized coefficient is treated as an
/// implementation bug rather than rounding.
const BOUND_SLACK: f64 = 1e-9;

/// One prime with its normalized coefficient and angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PrimeAngle {
    pub p: u64,
    /// `tau(p) * p^{-11/2}`, in `[-2, 2]`.
    pub a: f64,
    /// The angle in `[0, pi]` with `a = 2 cos(theta)`.
    pub theta: f64,
}

/// Angles for every prime up to a cutoff, in increasing prime order.
///
/// Immutable after construction and safe to share across threads.
#[derive(Debug, Clone)]
pub struct AngleTable {
    entries: Vec<PrimeAngle>,
    cutoff: u64,
}

impl AngleTable {
    pub fn cutoff(&self) -> u64 {
        self.cutoff
    }

    pub fn entries(&self) -> &[PrimeAngle] {
        &self.entries
    }

    /// Look up the entry for a prime `p`.
    pub fn angle(&self, p: u64) -> Result<&PrimeAngle> {
        self.entries
            .binary_search_by_key(&p, |e| e.p)
            .map(|i| &self.entries[i])
            .map_err(|_| Error::PrimeNotInTable {
                p,
                cutoff: self.cutoff,
            })
    }

    pub(crate) fn from_entries(entries: Vec<PrimeAngle>, cutoff: u64) -> Self {
        Self { entries, cutoff }
    }
}

/// Normalize `tau(p)` for every prime `p <= cutoff` into coefficients and
/// angles. Parallel over primes with a deterministic ordered result.
///
/// Fails with [`Error::DeligneViolation`] if any `|a(p)|` exceeds
/// `2 + 1e-9`; that bound holds for every prime, so a violation means the
/// tau table is corrupt.
pub fn build_angles(table: &TauTable, cutoff: u64) -> Result<AngleTable> {
    if cutoff > table.limit() {
        return Err(Error::CutoffExceedsTable {
            cutoff,
            limit: table.limit(),
        });
    }
    let primes = primes_up_to(cutoff);
    let entries: Vec<PrimeAngle> = primes
        .par_iter()
        .map(|&p| {
            let tau_p = table.tau(p).expect("prime within table limit");
            let a = normalize(tau_p, p);
            if a.abs() > 2.0 + BOUND_SLACK {
                return Err(Error::DeligneViolation { p, value: a });
            }
            Ok(PrimeAngle {
                p,
                a,
                theta: angle_from_coefficient(a),
            })
        })
        .collect::<Result<_>>()?;
    Ok(AngleTable { entries, cutoff })
}

/// `tau(n) * n^{-11/2}` via an exact integer square root; relative error
/// is a few ulps even when `tau(n)` far exceeds the f64 mantissa.
pub fn normalize(tau_n: &BigInt, n: u64) -> f64 {
    signed_sqrt_ratio(tau_n, &BigInt::from(n).pow(11))
}

/// `tau(n^2) * n^{-11}` by exact scaled division; the second-order analogue
/// of [`normalize`], used to cross-check `a(p^2) = a(p)^2 - 1`.
pub fn normalize_square(tau_n2: &BigInt, n: u64) -> f64 {
    big_ratio_to_f64(tau_n2, &BigInt::from(n).pow(11))
}

/// The unique angle in `[0, pi]` with `a = 2 cos(theta)`.
///
/// `a / 2` is clamped into `[-1, 1]` before `acos` so rounding at the
/// endpoints can never produce NaN.
pub fn angle_from_coefficient(a: f64) -> f64 {
    (a / 2.0).clamp(-1.0, 1.0).acos()
}

/// Distribution function of the measure `(2/pi) sin^2(theta) dtheta` on
/// `[0, pi]`: `(theta - sin(theta) cos(theta)) / pi`.
pub fn satotate_cdf(theta: f64) -> Result<f64> {
    if !(0.0..=std::f64::consts::PI).contains(&theta) {
        return Err(Error::ThetaOutOfRange(theta));
    }
    Ok((theta - theta.sin() * theta.cos()) / std::f64::consts::PI)
}

/// One histogram row: a bin `[lo, hi)` (the last bin is closed), its
/// empirical count, and the model mass of the bin.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BinRow {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
    pub model_mass: f64,
}

/// Empirical-vs-model comparison of an angle table.
#[derive(Debug, Clone, Serialize)]
pub struct SatoTateReport {
    /// Max over bin edges of |empirical CDF - model CDF|.
    pub sup_distance: f64,
    pub bins: Vec<BinRow>,
    pub total: usize,
}

/// Compare the empirical angle distribution against the model on a uniform
/// partition of `[0, pi]` into `bins` bins.
pub fn satotate_test(angles: &AngleTable, bins: usize) -> Result<SatoTateReport> {
    if bins < 2 {
        return Err(Error::TooFewBins(bins));
    }
    if angles.entries.is_empty() {
        return Err(Error::EmptyInput("angle table"));
    }
    let pi = std::f64::consts::PI;
    let total = angles.entries.len();
    let mut counts = vec![0usize; bins];
    for e in &angles.entries {
        let idx = ((e.theta / pi) * bins as f64).floor() as usize;
        counts[idx.min(bins - 1)] += 1;
    }

    let mut rows = Vec::with_capacity(bins);
    let mut sup = 0.0f64;
    let mut cumulative = 0usize;
    for (i, &count) in counts.iter().enumerate() {
        let lo = pi * i as f64 / bins as f64;
        let hi = pi * (i + 1) as f64 / bins as f64;
        let model_mass = satotate_cdf(hi)? - satotate_cdf(lo)?;
        rows.push(BinRow {
            lo,
            hi,
            count,
            model_mass,
        });
        cumulative += count;
        let empirical = cumulative as f64 / total as f64;
        sup = sup.max((empirical - satotate_cdf(hi)?).abs());
    }
    Ok(SatoTateReport {
        sup_distance: sup,
        bins: rows,
        total,
    })
}
