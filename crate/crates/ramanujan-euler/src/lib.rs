//! Exact computations around the discriminant cusp form: the tau function,
//! its normalized prime angles, the SU(2) character ring, the Chebyshev
//! sup-norm gate for monic integer polynomials, and truncated degree-two
//! Euler products with their factorization identities.
//!
//! Everything arithmetic is exact where it matters: tau values are
//! arbitrary-precision integers, unitarity witnesses are certified
//! rationals, and the floating-point layers carry explicit tolerances.
//! Euler products are evaluated only in the absolute-convergence region
//! `Re(s) > 1`; nothing here claims an analytic continuation.
//!
//! ## Examples
//!
//! The `examples/` directory is the guided tour, one runnable program per
//! capability:
//!
//! - **`tau_table`** - exact tau values, multiplicativity, prime-square
//!   recursion
//! - **`prime_angles`** - normalized coefficients, angles, and the
//!   empirical distribution against the sin^2 model
//! - **`character_ring`** - Clebsch-Gordan products, chi-decompositions,
//!   unitarity verdicts for degree-two families
//! - **`chebyshev_gate`** - the sup-norm classifier with exact rational
//!   witnesses
//! - **`euler_identities`** - per-prime factorization identities and their
//!   truncated-product forms
//! - **`dirichlet_coefficients`** - Euler products expanded into Dirichlet
//!   series coefficients
//! - **`natural_boundary`** - zero clouds accumulating at `Re(s) = 0` for
//!   non-Chebyshev polynomials
//!
//! ```bash
//! cargo run --release --example tau_table
//! cargo run --release --example chebyshev_gate
//! ```
//!
//! ## CLI
//!
//! The same functionality ships as one binary with subcommands `tau`,
//! `angles`, `satotate`, `character`, `classify`, `lfun`, `verify`, and
//! `boundary`:
//!
//! ```bash
//! cargo run --release -- classify --poly "x^2-2"
//! cargo run --release -- lfun --spec sym:2 --s 2.0 --cutoff 10000
//! ```
//!
//! ## Quick start
//!
//! ```
//! use ramanujan_euler::{build_angles, classify, expand_delta, Classification};
//!
//! let table = expand_delta(1000).unwrap();
//! assert_eq!(table.tau(2).unwrap().to_string(), "-24");
//!
//! let angles = build_angles(&table, 1000).unwrap();
//! assert!(angles.entries().iter().all(|e| e.a.abs() <= 2.0));
//!
//! let f: ramanujan_euler::IntPolynomial = "x^2-2".parse().unwrap();
//! assert!(matches!(classify(&f).unwrap(), Classification::Unitary { degree: 2 }));
//! ```

pub mod boundary;
pub mod cache;
pub mod characters;
pub mod chebyshev;
pub mod cli;
pub mod error;
pub mod euler;
pub mod poly;
pub mod primes;
pub mod satotate;
pub mod series;
pub mod svg;
pub mod tau;

pub use boundary::{cloud_summary, zero_cloud, CloudSummary, ZeroCloudPoint};
pub use characters::{
    cos_character, from_polynomial, unitarity_test, DegreeTwoFamily, Sign, UnitarityVerdict,
    VirtualCharacter,
};
pub use chebyshev::{classify, dilated_chebyshev, witness_search, Classification};
pub use error::{Error, Result};
pub use euler::{
    dirichlet_expand, local_factor, truncated_product, truncated_product_tree,
    verify_local_identity, EulerProductSpec, IdentityReport, LocalFactor, LocalIdentity,
    TruncatedValue,
};
pub use poly::IntPolynomial;
pub use satotate::{
    build_angles, satotate_cdf, satotate_test, AngleTable, PrimeAngle, SatoTateReport,
};
pub use series::PowerSeriesZ;
pub use tau::{expand_delta, TauTable};
