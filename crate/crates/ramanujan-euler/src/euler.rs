//! Local factors, truncated Euler products, per-prime factorization
//! identities, and Dirichlet coefficients.
//!
//! Every product family here is a product over primes of the reciprocal of
//! a polynomial in `T = p^{-s}`, built from the angle `theta(p)`:
//!
//! * `Zeta`: `1 - T`
//! * `Sym(m)`: `prod_{j=0..m} (1 - e^{i(m-2j) theta} T)`, assembled from
//!   real quadratic blocks `1 - 2cos(k theta) T + T^2`
//! * `Zpm(m, sign)`: `1 +/- 2cos(m theta) T + T^2`
//! * `Zf(f, sign)`: `1 +/- f(a(p)) T + T^2`
//! * `Zexample(m)`: `1 - (a(p^2) - m) T + T^2` with `a(p^2) = a(p)^2 - 1`
//!
//! Products are evaluated only in the absolute-convergence region
//! `Re(s) > 1`; no analytic continuation is claimed anywhere. Identities
//! involving the argument `2s` substitute `T -> T^2` at the local level,
//! which keeps every check exact per prime.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::characters::Sign;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::primes::primes_up_to;
use crate::satotate::AngleTable;

/// Per-prime polynomial in `T = p^{-s}` with constant term 1.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalFactor {
    coeffs: Vec<Complex64>,
}

impl LocalFactor {
    fn from_real(coeffs: Vec<f64>) -> Self {
        Self {
            coeffs: coeffs.into_iter().map(|c| Complex64::new(c, 0.0)).collect(),
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Real parts of the coefficients. Every family constructed here has
    /// exactly real coefficients.
    pub fn real_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.re).collect()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation at a complex argument.
    pub fn eval(&self, t: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// All complex roots by Durand-Kerner iteration. Degrees at desk scale
    /// are tiny, so the plain simultaneous iteration is plenty.
    pub fn roots(&self) -> Vec<Complex64> {
        let n = self.degree();
        if n == 0 {
            return Vec::new();
        }
        if n == 1 {
            return vec![-self.coeffs[0] / self.coeffs[1]];
        }
        let lead = self.coeffs[n];
        let monic: Vec<Complex64> = self.coeffs.iter().map(|c| c / lead).collect();
        let mut roots: Vec<Complex64> = (0..n)
            .map(|k| Complex64::new(0.4, 0.9).powu(k as u32 + 1))
            .collect();
        for _ in 0..200 {
            let mut delta: f64 = 0.0;
            for i in 0..n {
                let zi = roots[i];
                let mut denom = Complex64::new(1.0, 0.0);
                for (j, &zj) in roots.iter().enumerate() {
                    if j != i {
                        denom *= zi - zj;
                    }
                }
                let step = eval_monic(&monic, zi) / denom;
                roots[i] = zi - step;
                delta = delta.max(step.norm());
            }
            if delta < 1e-14 {
                break;
            }
        }
        roots
    }
}

fn eval_monic(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Which Euler product family to evaluate.
#[derive(Debug, Clone, PartialEq)]
pub enum EulerProductSpec {
    /// The Riemann zeta product, local factor `1 - T`.
    Zeta,
    /// Symmetric power of degree `m + 1`.
    Sym(u32),
    /// `1 +/- 2cos(m theta) T + T^2`.
    Zpm(u32, Sign),
    /// `1 +/- f(a(p)) T + T^2`.
    Zf(IntPolynomial, Sign),
    /// `1 - (a(p^2) - m) T + T^2`.
    Zexample(i64),
}

impl EulerProductSpec {
    /// Parse the CLI syntax `zeta | sym:M | zpm:M:(+|-) | zf:POLY:(+|-) |
    /// zex:M`.
    pub fn parse(text: &str) -> Result<Self> {
        let unknown = || Error::UnknownSpec(text.to_string());
        if text == "zeta" {
            return Ok(Self::Zeta);
        }
        if let Some(rest) = text.strip_prefix("sym:") {
            return rest.parse::<u32>().map(Self::Sym).map_err(|_| unknown());
        }
        if let Some(rest) = text.strip_prefix("zpm:") {
            let (m, sign) = rest.rsplit_once(':').ok_or_else(unknown)?;
            let m = m.parse::<u32>().map_err(|_| unknown())?;
            return Ok(Self::Zpm(m, Sign::parse(sign)?));
        }
        if let Some(rest) = text.strip_prefix("zf:") {
            let (poly, sign) = rest.rsplit_once(':').ok_or_else(unknown)?;
            return Ok(Self::Zf(poly.parse()?, Sign::parse(sign)?));
        }
        if let Some(rest) = text.strip_prefix("zex:") {
            return rest.parse::<i64>().map(Self::Zexample).map_err(|_| unknown());
        }
        Err(unknown())
    }

    /// Degree of the local factor, constant across primes.
    pub fn local_degree(&self) -> usize {
        match self {
            Self::Zeta => 1,
            Self::Sym(m) => *m as usize + 1,
            Self::Zpm(..) | Self::Zf(..) | Self::Zexample(_) => 2,
        }
    }
}

impl fmt::Display for EulerProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Zeta => write!(f, "zeta"),
            Self::Sym(m) => write!(f, "sym:{m}"),
            Self::Zpm(m, s) => write!(f, "zpm:{m}:{s}"),
            Self::Zf(p, s) => write!(f, "zf:{p}:{s}"),
            Self::Zexample(m) => write!(f, "zex:{m}"),
        }
    }
}

/// The local factor of `spec` at the prime `p`.
pub fn local_factor(spec: &EulerProductSpec, p: u64, angles: &AngleTable) -> Result<LocalFactor> {
    let entry = angles.angle(p)?;
    let theta = entry.theta;
    Ok(match spec {
        EulerProductSpec::Zeta => LocalFactor::from_real(vec![1.0, -1.0]),
        EulerProductSpec::Sym(m) => LocalFactor::from_real(sym_factor(*m, theta)),
        EulerProductSpec::Zpm(m, sign) => LocalFactor::from_real(vec![
            1.0,
            sign.factor() * 2.0 * (*m as f64 * theta).cos(),
            1.0,
        ]),
        EulerProductSpec::Zf(f, sign) => LocalFactor::from_real(vec![
            1.0,
            sign.factor() * f.eval_f64(entry.a),
            1.0,
        ]),
        EulerProductSpec::Zexample(m) => {
            let a_sq = entry.a * entry.a - 1.0;
            LocalFactor::from_real(vec![1.0, -(a_sq - *m as f64), 1.0])
        }
    })
}

/// Coefficients of `prod_{j=0..m} (1 - e^{i(m-2j) theta} T)`, assembled
/// from conjugate pairs so the result is exactly real: the pair with
/// exponents `+/- k` contributes `1 - 2cos(k theta) T + T^2`, and even `m`
/// leaves the middle factor `1 - T`.
fn sym_factor(m: u32, theta: f64) -> Vec<f64> {
    let mut acc = vec![1.0];
    let mut k = if m % 2 == 0 {
        acc = poly_mul(&acc, &[1.0, -1.0]);
        2
    } else {
        1
    };
    while k <= m {
        acc = poly_mul(&acc, &[1.0, -2.0 * (k as f64 * theta).cos(), 1.0]);
        k += 2;
    }
    acc
}

fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Substitute `T -> T^2`: the local-level image of doubling the argument.
fn subst_t_squared(a: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; 2 * a.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        out[2 * i] = ai;
    }
    out
}

/// Value of a truncated Euler product.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TruncatedValue {
    pub re: f64,
    pub im: f64,
    pub cutoff: u64,
    /// `Re(s)` of the evaluation point.
    pub sigma: f64,
    /// Heuristic bound on the log-scale truncation tail:
    /// `2 (deg + 1) P^{1 - sigma} / ((sigma - 1) ln P)`. Documented as a
    /// heuristic, not a proven bound.
    pub tail_hint: f64,
}

impl TruncatedValue {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Multiply the local factors' reciprocals over all primes `p <= cutoff`
/// in increasing order. Requires `Re(s) > 1`.
pub fn truncated_product(
    spec: &EulerProductSpec,
    s: Complex64,
    cutoff: u64,
    angles: &AngleTable,
) -> Result<TruncatedValue> {
    let factors = local_values(spec, s, cutoff, angles)?;
    let mut acc = Complex64::new(1.0, 0.0);
    for (_, v) in &factors {
        acc /= v;
    }
    Ok(finish_value(spec, s, cutoff, acc))
}

/// Same value as [`truncated_product`] but reduced as a balanced pairwise
/// tree; agrees with the sequential order to ~1e-12 and exists to check
/// that the result does not depend on the reduction shape.
pub fn truncated_product_tree(
    spec: &EulerProductSpec,
    s: Complex64,
    cutoff: u64,
    angles: &AngleTable,
) -> Result<TruncatedValue> {
    let factors = local_values(spec, s, cutoff, angles)?;
    let mut layer: Vec<Complex64> = factors.iter().map(|(_, v)| 1.0 / v).collect();
    if layer.is_empty() {
        layer.push(Complex64::new(1.0, 0.0));
    }
    while layer.len() > 1 {
        layer = layer
            .chunks(2)
            .map(|c| if c.len() == 2 { c[0] * c[1] } else { c[0] })
            .collect();
    }
    Ok(finish_value(spec, s, cutoff, layer[0]))
}

fn local_values(
    spec: &EulerProductSpec,
    s: Complex64,
    cutoff: u64,
    angles: &AngleTable,
) -> Result<Vec<(u64, Complex64)>> {
    if s.re <= 1.0 {
        return Err(Error::SigmaOutOfRange(s.re));
    }
    if cutoff > angles.cutoff() {
        return Err(Error::CutoffExceedsTable {
            cutoff,
            limit: angles.cutoff(),
        });
    }
    let mut out = Vec::new();
    for entry in angles.entries() {
        let p = entry.p;
        if p > cutoff {
            break;
        }
        let t = (-s * (p as f64).ln()).exp();
        let v = local_factor(spec, p, angles)?.eval(t);
        if v.norm() < 1e-12 {
            return Err(Error::PoleDetected {
                p,
                s: format!("{} + {}i", s.re, s.im),
            });
        }
        out.push((p, v));
    }
    Ok(out)
}

fn finish_value(
    spec: &EulerProductSpec,
    s: Complex64,
    cutoff: u64,
    value: Complex64,
) -> TruncatedValue {
    let sigma = s.re;
    let p = cutoff.max(2) as f64;
    let deg = spec.local_degree() as f64;
    TruncatedValue {
        re: value.re,
        im: value.im,
        cutoff,
        sigma,
        tail_hint: 2.0 * (deg + 1.0) * p.powf(1.0 - sigma) / ((sigma - 1.0) * p.ln()),
    }
}

/// The per-prime factorization identities, each an exact polynomial
/// identity in `T` once `theta(p)` is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalIdentity {
    /// Both sign rearrangements at `m = 0`: `1 -/+ 2T + T^2 = (1 -/+ T)^2`,
    /// stated as the squared-zeta forms.
    ZetaSquares,
    /// The `m = 1` plus-sign chain:
    /// `Zpm(1,+)(T) * Sym1(T) * Sym0(T^2) = Sym2(T^2)`.
    ZOnePlus,
    /// `Sym^m(T) = Zpm(m,-)(T) * Sym^{m-2}(T)` for `m >= 2`.
    SymMinus { m: u32 },
    /// `Zpm(m,+)(T) * Sym^{2m-2}(T^2) * Sym^m(T) =
    ///  Sym^{2m}(T^2) * Sym^{m-2}(T)` for `m >= 2`.
    SymPlus { m: u32 },
    /// The cubic rewrite of the symmetric square:
    /// `(1 - T)(1 - (a(p^2) - 1) T + T^2) = 1 - a(p^2) T + a(p^2) T^2 - T^3`,
    /// which equals the `Sym^2` factor.
    Shimura,
}

/// Largest `m` accepted for the telescoping identities.
pub const MAX_IDENTITY_M: u32 = 10;

impl LocalIdentity {
    /// Parse a CLI identity name, with `m` supplied separately for the
    /// telescoping families.
    pub fn parse(name: &str, m: Option<u32>) -> Result<Self> {
        match name {
            "zeta" => Ok(Self::ZetaSquares),
            "z1-plus" => Ok(Self::ZOnePlus),
            "sym-minus" => Ok(Self::SymMinus { m: m.unwrap_or(2) }),
            "sym-plus" => Ok(Self::SymPlus { m: m.unwrap_or(2) }),
            "shimura" => Ok(Self::Shimura),
            other => Err(Error::UnknownIdentity(other.to_string())),
        }
    }
}

impl fmt::Display for LocalIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ZetaSquares => write!(f, "zeta"),
            Self::ZOnePlus => write!(f, "z1-plus"),
            Self::SymMinus { m } => write!(f, "sym-minus m={m}"),
            Self::SymPlus { m } => write!(f, "sym-plus m={m}"),
            Self::Shimura => write!(f, "shimura"),
        }
    }
}

/// Result of a per-prime identity check.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct IdentityReport {
    pub max_coefficient_error: f64,
}

/// Expand both sides of `identity` at the prime `p` as polynomials in `T`
/// and report the maximum absolute coefficient difference.
pub fn verify_local_identity(
    identity: LocalIdentity,
    p: u64,
    angles: &AngleTable,
) -> Result<IdentityReport> {
    let entry = angles.angle(p)?;
    let theta = entry.theta;
    let (lhs, rhs): (Vec<f64>, Vec<f64>) = match identity {
        LocalIdentity::ZetaSquares => {
            // (1 - 2T + T^2) vs (1 - T)^2, and (1 + 2T + T^2)(1 - T)^2 vs
            // (1 - T^2)^2; both are coefficient identities with no angle.
            let minus = vec![1.0, -2.0, 1.0];
            let sq = poly_mul(&[1.0, -1.0], &[1.0, -1.0]);
            let e1 = max_coeff_diff(&minus, &sq);
            let plus = poly_mul(&poly_mul(&[1.0, 2.0, 1.0], &[1.0, -1.0]), &[1.0, -1.0]);
            let zeta2 = poly_mul(&[1.0, 0.0, -1.0], &[1.0, 0.0, -1.0]);
            let e2 = max_coeff_diff(&plus, &zeta2);
            return Ok(IdentityReport {
                max_coefficient_error: e1.max(e2),
            });
        }
        LocalIdentity::ZOnePlus => {
            let z1p = vec![1.0, 2.0 * theta.cos(), 1.0];
            let lhs = poly_mul(
                &poly_mul(&z1p, &sym_factor(1, theta)),
                &subst_t_squared(&sym_factor(0, theta)),
            );
            (lhs, subst_t_squared(&sym_factor(2, theta)))
        }
        LocalIdentity::SymMinus { m } => {
            check_identity_m(m)?;
            let zm = vec![1.0, -2.0 * (m as f64 * theta).cos(), 1.0];
            let lhs = poly_mul(&zm, &sym_factor(m - 2, theta));
            (lhs, sym_factor(m, theta))
        }
        LocalIdentity::SymPlus { m } => {
            check_identity_m(m)?;
            let zp = vec![1.0, 2.0 * (m as f64 * theta).cos(), 1.0];
            let lhs = poly_mul(
                &poly_mul(&zp, &subst_t_squared(&sym_factor(2 * m - 2, theta))),
                &sym_factor(m, theta),
            );
            let rhs = poly_mul(
                &subst_t_squared(&sym_factor(2 * m, theta)),
                &sym_factor(m - 2, theta),
            );
            (lhs, rhs)
        }
        LocalIdentity::Shimura => {
            let a_sq = entry.a * entry.a - 1.0;
            let lhs = poly_mul(&[1.0, -1.0], &[1.0, -(a_sq - 1.0), 1.0]);
            let cubic = vec![1.0, -a_sq, a_sq, -1.0];
            let e1 = max_coeff_diff(&lhs, &cubic);
            let e2 = max_coeff_diff(&cubic, &sym_factor(2, theta));
            return Ok(IdentityReport {
                max_coefficient_error: e1.max(e2),
            });
        }
    };
    Ok(IdentityReport {
        max_coefficient_error: max_coeff_diff(&lhs, &rhs),
    })
}

fn check_identity_m(m: u32) -> Result<()> {
    if !(2..=MAX_IDENTITY_M).contains(&m) {
        return Err(Error::IdentityDegreeOutOfRange {
            m,
            max: MAX_IDENTITY_M,
        });
    }
    Ok(())
}

fn max_coeff_diff(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0.0);
            let y = b.get(i).copied().unwrap_or(0.0);
            (x - y).abs()
        })
        .fold(0.0, f64::max)
}

/// Expand the Euler product into Dirichlet coefficients `c(1) ..= c(n_max)`
/// (index 0 of the returned vector is unused and zero): multiply in the
/// geometric expansion of each local factor's reciprocal, prime by prime.
pub fn dirichlet_expand(
    spec: &EulerProductSpec,
    n_max: u64,
    angles: &AngleTable,
) -> Result<Vec<f64>> {
    let primes = primes_up_to(n_max);
    if let Some(&largest) = primes.last() {
        if largest > angles.cutoff() {
            return Err(Error::CutoffExceedsTable {
                cutoff: largest,
                limit: angles.cutoff(),
            });
        }
    }
    let n_max = n_max as usize;
    let mut c = vec![0.0f64; n_max + 1];
    if n_max >= 1 {
        c[1] = 1.0;
    }
    for &p in &primes {
        let factor = local_factor(spec, p, angles)?.real_coeffs();
        // Geometric expansion of the reciprocal up to the largest power of
        // p that fits below n_max.
        let mut max_k = 0;
        let mut pk = p as usize;
        while pk <= n_max {
            max_k += 1;
            pk = pk.saturating_mul(p as usize);
        }
        let mut inv = vec![0.0f64; max_k + 1];
        inv[0] = 1.0;
        for k in 1..=max_k {
            let mut acc = 0.0;
            for j in 1..=k.min(factor.len() - 1) {
                acc += factor[j] * inv[k - j];
            }
            inv[k] = -acc;
        }
        // Multiplicative update; sources are the indices not divisible
        // by p, so each target n * p^k is written exactly once.
        for n in 1..=n_max {
            if c[n] == 0.0 || n % p as usize == 0 {
                continue;
            }
            let mut target = n;
            for coeff in inv.iter().skip(1) {
                target = match target.checked_mul(p as usize) {
                    Some(t) if t <= n_max => t,
                    _ => break,
                };
                c[target] += c[n] * coeff;
            }
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::satotate::build_angles;
    use crate::tau::expand_delta;
    use std::sync::OnceLock;

    /// Shared small angle table for the module tests.
    fn angles_1k() -> &'static AngleTable {
        static TABLE: OnceLock<AngleTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let t = expand_delta(1_000).unwrap();
            build_angles(&t, 1_000).unwrap()
        })
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn spec_parsing_round_trips() {
        for text in ["zeta", "sym:3", "zpm:4:+", "zpm:0:-", "zex:1"] {
            let spec = EulerProductSpec::parse(text).unwrap();
            assert_eq!(spec.to_string(), text);
        }
        // The zf form re-displays the polynomial with spacing; parsing the
        // display form lands on the same spec.
        let spec = EulerProductSpec::parse("zf:x^2-2:-").unwrap();
        assert_eq!(EulerProductSpec::parse(&spec.to_string()).unwrap(), spec);
        assert!(EulerProductSpec::parse("sym").is_err());
        assert!(EulerProductSpec::parse("zpm:3:*").is_err());
        assert!(EulerProductSpec::parse("nope:1").is_err());
    }

    #[test]
    fn zeta_factor_is_linear() {
        let f = local_factor(&EulerProductSpec::Zeta, 7, angles_1k()).unwrap();
        assert_eq!(f.real_coeffs(), vec![1.0, -1.0]);
    }

    #[test]
    fn sym1_factor_matches_quadratic() {
        let angles = angles_1k();
        for p in [2u64, 3, 5, 97] {
            let theta = angles.angle(p).unwrap().theta;
            let f = local_factor(&EulerProductSpec::Sym(1), p, angles).unwrap();
            let coeffs = f.real_coeffs();
            assert_eq!(coeffs.len(), 3);
            assert!((coeffs[0] - 1.0).abs() < 1e-15);
            assert!((coeffs[1] + 2.0 * theta.cos()).abs() < 1e-15);
            assert!((coeffs[2] - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn zexample_factor_uses_hecke_relation() {
        // Zexample(1) at p: 1 - (a(p)^2 - 2) T + T^2, via a(p^2) = a(p)^2 - 1.
        let angles = angles_1k();
        let a2 = angles.angle(2).unwrap().a;
        let f = local_factor(&EulerProductSpec::Zexample(1), 2, angles).unwrap();
        let coeffs = f.real_coeffs();
        assert!((coeffs[1] + (a2 * a2 - 2.0)).abs() < 1e-15);
    }

    #[test]
    fn sym_factor_degree_and_constant_term() {
        let angles = angles_1k();
        for m in 0..=8u32 {
            let f = local_factor(&EulerProductSpec::Sym(m), 11, angles).unwrap();
            assert_eq!(f.degree(), m as usize + 1);
            assert_eq!(f.coeffs()[0], c(1.0, 0.0));
        }
    }

    #[test]
    fn sym_factor_matches_complex_linear_product() {
        // The real quadratic assembly equals the product over the exponent
        // ladder of complex linear factors.
        let angles = angles_1k();
        for &p in &[2u64, 13, 101] {
            let theta = angles.angle(p).unwrap().theta;
            for m in 0..=6u32 {
                let real = sym_factor(m, theta);
                let mut acc = vec![c(1.0, 0.0)];
                for j in 0..=m {
                    let exp = m as i64 - 2 * j as i64;
                    let root = Complex64::new(0.0, exp as f64 * theta).exp();
                    let mut next = vec![c(0.0, 0.0); acc.len() + 1];
                    for (i, &a) in acc.iter().enumerate() {
                        next[i] += a;
                        next[i + 1] -= a * root;
                    }
                    acc = next;
                }
                for (i, &r) in real.iter().enumerate() {
                    assert!((acc[i] - c(r, 0.0)).norm() < 1e-12, "p={p}, m={m}, i={i}");
                }
            }
        }
    }

    #[test]
    fn truncated_zeta_matches_exact_rational_oracle() {
        // s = 2, primes <= 10: (4/3)(9/8)(25/24)(49/48) = 1225/768.
        let v = truncated_product(&EulerProductSpec::Zeta, c(2.0, 0.0), 10, angles_1k()).unwrap();
        let expected = 1225.0 / 768.0;
        assert!((v.value().re - expected).abs() < 1e-12);
        assert!(v.value().im.abs() < 1e-15);
        assert!(v.tail_hint > 0.0 && v.tail_hint.is_finite());
    }

    #[test]
    fn zpm_zero_minus_is_zeta_squared() {
        // Holds factor by factor, hence for the truncated product.
        let angles = angles_1k();
        for s in [c(2.0, 0.0), c(3.0, 0.0), c(2.0, 1.0)] {
            let z = truncated_product(&EulerProductSpec::Zeta, s, 1_000, angles).unwrap();
            let z0m =
                truncated_product(&EulerProductSpec::Zpm(0, Sign::Minus), s, 1_000, angles)
                    .unwrap();
            let expected = z.value() * z.value();
            assert!(
                (z0m.value() - expected).norm() < 1e-10 * expected.norm(),
                "s = {s}"
            );
        }
    }

    #[test]
    fn rejects_bad_evaluation_points() {
        let angles = angles_1k();
        assert!(matches!(
            truncated_product(&EulerProductSpec::Zeta, c(1.0, 0.0), 100, angles),
            Err(Error::SigmaOutOfRange(_))
        ));
        assert!(matches!(
            truncated_product(&EulerProductSpec::Zeta, c(2.0, 0.0), 2_000, angles),
            Err(Error::CutoffExceedsTable { .. })
        ));
    }

    #[test]
    fn tree_reduction_agrees_with_sequential() {
        let angles = angles_1k();
        for spec in [
            EulerProductSpec::Zeta,
            EulerProductSpec::Sym(3),
            EulerProductSpec::Zpm(2, Sign::Plus),
        ] {
            let s = c(2.0, 1.0);
            let seq = truncated_product(&spec, s, 1_000, angles).unwrap();
            let tree = truncated_product_tree(&spec, s, 1_000, angles).unwrap();
            assert!(
                (seq.value() - tree.value()).norm() < 1e-12 * seq.value().norm(),
                "{spec}"
            );
        }
    }

    #[test]
    fn zeta_truncation_is_monotone_in_cutoff() {
        let angles = angles_1k();
        let mut prev = 0.0;
        for cutoff in [10u64, 50, 100, 500, 1_000] {
            let v = truncated_product(&EulerProductSpec::Zeta, c(2.0, 0.0), cutoff, angles)
                .unwrap()
                .value()
                .re;
            assert!(v > prev, "cutoff {cutoff}");
            prev = v;
        }
    }

    #[test]
    fn local_identities_hold_per_prime() {
        let angles = angles_1k();
        for &p in &[2u64, 3, 5, 7, 11, 997] {
            for identity in [
                LocalIdentity::ZetaSquares,
                LocalIdentity::ZOnePlus,
                LocalIdentity::Shimura,
            ] {
                let r = verify_local_identity(identity, p, angles).unwrap();
                assert!(
                    r.max_coefficient_error <= 1e-12,
                    "{identity} at p = {p}: {}",
                    r.max_coefficient_error
                );
            }
            for m in 2..=6 {
                for identity in [LocalIdentity::SymMinus { m }, LocalIdentity::SymPlus { m }] {
                    let r = verify_local_identity(identity, p, angles).unwrap();
                    assert!(
                        r.max_coefficient_error <= 1e-12,
                        "{identity} at p = {p}: {}",
                        r.max_coefficient_error
                    );
                }
            }
        }
    }

    #[test]
    fn zeta_squares_identity_is_exact() {
        let r = verify_local_identity(LocalIdentity::ZetaSquares, 2, angles_1k()).unwrap();
        assert_eq!(r.max_coefficient_error, 0.0);
    }

    #[test]
    fn identity_degree_bounds() {
        let angles = angles_1k();
        assert!(matches!(
            verify_local_identity(LocalIdentity::SymMinus { m: 1 }, 2, angles),
            Err(Error::IdentityDegreeOutOfRange { .. })
        ));
        assert!(matches!(
            verify_local_identity(LocalIdentity::SymPlus { m: 11 }, 2, angles),
            Err(Error::IdentityDegreeOutOfRange { .. })
        ));
        assert!(matches!(
            LocalIdentity::parse("wat", None),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn dirichlet_zeta_is_all_ones() {
        let coeffs = dirichlet_expand(&EulerProductSpec::Zeta, 200, angles_1k()).unwrap();
        for n in 1..=200 {
            assert!((coeffs[n] - 1.0).abs() < 1e-12, "c({n})");
        }
    }

    #[test]
    fn dirichlet_sym1_matches_normalized_tau() {
        let table = expand_delta(1_000).unwrap();
        let angles = build_angles(&table, 1_000).unwrap();
        let coeffs = dirichlet_expand(&EulerProductSpec::Sym(1), 100, &angles).unwrap();
        for n in 1..=100u64 {
            let want = crate::satotate::normalize(table.tau(n).unwrap(), n);
            assert!(
                (coeffs[n as usize] - want).abs() < 1e-9,
                "c({n}) = {} vs {want}",
                coeffs[n as usize]
            );
        }
    }

    #[test]
    fn dirichlet_sym1_prime_squares() {
        // c(p^2) = a(p)^2 - 1 from the degree-2 geometric expansion.
        let angles = angles_1k();
        let coeffs = dirichlet_expand(&EulerProductSpec::Sym(1), 1_000, angles).unwrap();
        for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let a = angles.angle(p).unwrap().a;
            let idx = (p * p) as usize;
            assert!(
                (coeffs[idx] - (a * a - 1.0)).abs() < 1e-10,
                "c({p}^2)"
            );
        }
    }

    #[test]
    fn dirichlet_hecke_recursion() {
        // c(p^{k+1}) = a(p) c(p^k) - c(p^{k-1}) for Sym(1).
        let angles = angles_1k();
        let coeffs = dirichlet_expand(&EulerProductSpec::Sym(1), 1_000, angles).unwrap();
        for &p in &[2u64, 3, 5] {
            let a = angles.angle(p).unwrap().a;
            let mut pk = p;
            let mut prev = 1.0; // c(p^0)
            let mut cur = coeffs[p as usize];
            while pk * p <= 1_000 {
                pk *= p;
                let next = coeffs[pk as usize];
                assert!(
                    (next - (a * cur - prev)).abs() < 1e-10,
                    "p = {p}, p^k = {pk}"
                );
                prev = cur;
                cur = next;
            }
        }
    }

    #[test]
    fn unitary_local_factors_have_unit_roots() {
        let angles = angles_1k();
        let cheby2: IntPolynomial = "x^2-2".parse().unwrap();
        let specs = [
            EulerProductSpec::Zeta,
            EulerProductSpec::Sym(3),
            EulerProductSpec::Sym(6),
            EulerProductSpec::Zpm(4, Sign::Plus),
            EulerProductSpec::Zf(cheby2, Sign::Minus),
            EulerProductSpec::Zexample(1),
        ];
        for spec in &specs {
            for e in angles.entries() {
                let f = local_factor(spec, e.p, angles).unwrap();
                for root in f.roots() {
                    assert!(
                        (root.norm() - 1.0).abs() < 1e-9,
                        "{spec} at p = {}: |root| = {}",
                        e.p,
                        root.norm()
                    );
                }
            }
        }
    }

    #[test]
    fn nonunitary_factor_has_off_circle_roots() {
        let angles = angles_1k();
        let f: IntPolynomial = "x-5".parse().unwrap();
        let spec = EulerProductSpec::Zf(f, Sign::Minus);
        let factor = local_factor(&spec, 2, angles).unwrap();
        let roots = factor.roots();
        assert_eq!(roots.len(), 2);
        // Roots are real with product 1, so the moduli split around 1.
        let prod: Complex64 = roots.iter().product();
        assert!((prod.norm() - 1.0).abs() < 1e-9);
        assert!(roots.iter().any(|r| r.norm() > 1.0 + 1e-6));
    }
}
