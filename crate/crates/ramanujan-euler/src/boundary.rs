//! Zero clouds: the s-plane images of local-factor roots across primes.
//!
//! For `1 +/- f(a(p)) T + T^2` the two roots multiply to 1. When
//! `|f(a(p))| <= 2` they are conjugates on the unit circle, so both map to
//! `Re(s) = 0`; when `|f(a(p))| > 2` they are real with reciprocal moduli
//! and land symmetrically off the axis, at distance shrinking like
//! `arccosh(|f(a(p))|/2) / ln p`. Plotting the cloud across primes makes
//! the accumulation toward `Re(s) = 0` visible for non-Chebyshev `f`.
//!
//! Only the principal branch is emitted: `t` is restricted to
//! `(-pi/ln p, pi/ln p]`; the full lattice of branches `s + 2 pi i k / ln p`
//! is implied. The cloud is numerical evidence, not a proof of anything
//! about continuation.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::Sign;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::satotate::AngleTable;

/// Sigma threshold between "on the axis" and "off the axis".
pub const OFF_AXIS_THRESHOLD: f64 = 1e-9;

/// One local-factor root mapped to the s-plane through `T = p^{-s}`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ZeroCloudPoint {
    pub p: u64,
    /// Modulus of the root in the T-plane.
    pub root_modulus: f64,
    /// `-ln(root_modulus) / ln(p)`: the real part of s.
    pub sigma: f64,
    /// Imaginary part of s on the principal branch.
    pub t: f64,
}

/// Solve `1 +/- f(a(p)) T + T^2 = 0` for every prime `p <= cutoff` and map
/// both roots to the s-plane. Output is sorted by prime; per prime the
/// nonnegative-sigma root comes first.
pub fn zero_cloud(
    f: &IntPolynomial,
    sign: Sign,
    cutoff: u64,
    angles: &AngleTable,
) -> Result<Vec<ZeroCloudPoint>> {
    if cutoff > angles.cutoff() {
        return Err(Error::CutoffExceedsTable {
            cutoff,
            limit: angles.cutoff(),
        });
    }
    let points: Vec<ZeroCloudPoint> = angles
        .entries()
        .par_iter()
        .filter(|e| e.p <= cutoff)
        .flat_map_iter(|e| {
            let coeff = sign.factor() * f.eval_f64(e.a);
            let mut pair = quadratic_roots(coeff).map(|root| to_s_plane(e.p, root));
            if pair[0].sigma < pair[1].sigma {
                pair.swap(0, 1);
            }
            pair
        })
        .collect();
    Ok(points)
}

/// Both roots of `T^2 + c T + 1`. The product of the roots is 1; for
/// `|c| > 2` the large root is computed first and the small one as its
/// exact reciprocal to avoid cancellation.
fn quadratic_roots(c: f64) -> [Complex64; 2] {
    let disc = c * c - 4.0;
    if disc <= 0.0 {
        let re = -c / 2.0;
        let im = (-disc).sqrt() / 2.0;
        [Complex64::new(re, im), Complex64::new(re, -im)]
    } else {
        let big = (-c - c.signum() * disc.sqrt()) / 2.0;
        [Complex64::new(big, 0.0), Complex64::new(1.0 / big, 0.0)]
    }
}

/// Map a root `T0` to `s = -ln(T0)/ln(p)` on the principal branch.
fn to_s_plane(p: u64, root: Complex64) -> ZeroCloudPoint {
    let ln_p = (p as f64).ln();
    let modulus = root.norm();
    // arg in [-pi, pi): fold the branch cut so t lands in (-pi/ln p, pi/ln p].
    let mut arg = root.arg();
    if arg == std::f64::consts::PI {
        arg = -std::f64::consts::PI;
    }
    ZeroCloudPoint {
        p,
        root_modulus: modulus,
        sigma: -modulus.ln() / ln_p,
        t: -arg / ln_p,
    }
}

/// Aggregate view of a cloud.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CloudSummary {
    /// Points with `|sigma| > 1e-9`.
    pub count_offaxis: usize,
    /// Smallest sigma among off-axis points with `sigma > 0`, if any.
    pub min_positive_sigma: Option<f64>,
    pub max_sigma: f64,
}

pub fn cloud_summary(points: &[ZeroCloudPoint]) -> Result<CloudSummary> {
    if points.is_empty() {
        return Err(Error::EmptyInput("zero cloud"));
    }
    let mut count_offaxis = 0;
    let mut min_positive: Option<f64> = None;
    let mut max_sigma = f64::NEG_INFINITY;
    for pt in points {
        if pt.sigma.abs() > OFF_AXIS_THRESHOLD {
            count_offaxis += 1;
            if pt.sigma > 0.0 {
                min_positive = Some(match min_positive {
                    Some(cur) => cur.min(pt.sigma),
                    None => pt.sigma,
                });
            }
        }
        max_sigma = max_sigma.max(pt.sigma);
    }
    Ok(CloudSummary {
        count_offaxis,
        min_positive_sigma: min_positive,
        max_sigma,
    })
}
