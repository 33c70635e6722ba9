//! Command-line interface: one thin binary over the library.
//!
//! Subcommands: `tau`, `angles`, `satotate`, `character`, `classify`,
//! `lfun`, `verify`, `boundary`. Exit codes: 0 on success, 1 on rejected
//! input (including unknown flags), 2 on an internal inconsistency such as
//! a normalized coefficient escaping `[-2, 2]` or a failed identity row.

use std::path::PathBuf;

use clap::{ArgAction, Parser, Subcommand};
use num_complex::Complex64;

use crate::boundary::{cloud_summary, zero_cloud};
use crate::cache::{load_or_build_angles, load_or_build_tau, resolve_cache_dir};
use crate::characters::{from_polynomial, unitarity_test, DegreeTwoFamily, Sign, UnitarityVerdict};
use crate::chebyshev::{classify, Classification};
use crate::error::{Error, Result};
use crate::euler::{
    truncated_product, verify_local_identity, EulerProductSpec, LocalIdentity,
};
use crate::poly::IntPolynomial;
use crate::satotate::satotate_test;
use crate::svg::{histogram_svg, scatter_svg};

/// Tolerance for per-prime identity rows in `verify`.
const IDENTITY_TOLERANCE: f64 = 1e-12;

/// Resolved run settings shared by the subcommands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Tau table limit; at least `cutoff`.
    pub limit: u64,
    /// Prime cutoff.
    pub cutoff: u64,
    /// Grid size for the unitarity test.
    pub grid: usize,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
}

impl RunConfig {
    fn new(limit: u64, cutoff: u64, common: &CommonArgs) -> Self {
        Self {
            limit: limit.max(cutoff),
            cutoff,
            grid: 4096,
            format: common.format,
            out: common.out.clone(),
            cache_dir: resolve_cache_dir(common.cache_dir.clone()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "ramanujan-euler",
    version,
    about = "Exact tau values, prime angles, unitarity certificates, and truncated Euler products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, clap::Args)]
struct CommonArgs {
    /// Output format for data emission.
    #[arg(long, value_enum, default_value = "csv", global = false)]
    format: OutputFormat,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cache directory for tau/angle tables (or RAMANUJAN_EULER_CACHE).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate tau(1..=N) exactly.
    Tau {
        #[arg(long)]
        limit: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Normalized coefficients a(p) and angles theta(p) for primes p <= P.
    Angles {
        #[arg(long)]
        limit: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Empirical angle distribution against the sin^2 model.
    Satotate {
        #[arg(long)]
        limit: u64,
        #[arg(long, default_value_t = 40)]
        bins: usize,
        /// Write a histogram SVG here.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Decompose f(2cos theta) into irreducible characters and test the
    /// degree-two family for unitarity.
    Character {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Print the chi-decomposition.
        #[arg(long, action = ArgAction::SetTrue)]
        decompose: bool,
        /// Print the unitarity verdict.
        #[arg(long, action = ArgAction::SetTrue)]
        unitary: bool,
        /// Sign of the family 1 +/- h T + T^2.
        #[arg(long, default_value = "-", allow_hyphen_values = true)]
        sign: String,
        /// Grid size for locating the maximum of |h|.
        #[arg(long, default_value_t = 4096)]
        grid: usize,
    },
    /// Decide |f| <= 2 on [-2, 2] for monic integer f, with certificate.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Evaluate a truncated Euler product at s with Re(s) > 1.
    Lfun {
        /// zeta | sym:M | zpm:M:(+|-) | zf:POLY:(+|-) | zex:M
        #[arg(long)]
        spec: String,
        /// Evaluation point RE or RE,IM.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long)]
        cutoff: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check per-prime factorization identities up to a cutoff.
    Verify {
        /// zeta | z1-plus | sym-minus | sym-plus | shimura | all
        #[arg(long)]
        identity: String,
        #[arg(long)]
        cutoff: u64,
        /// Largest m for the telescoping identities.
        #[arg(long, default_value_t = 6)]
        max_m: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Map local-factor zeros of 1 +/- f(a(p)) T + T^2 into the s-plane.
    Boundary {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value = "-", allow_hyphen_values = true)]
        sign: String,
        #[arg(long)]
        cutoff: u64,
        /// Write a scatter SVG here.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

/// Parse `std::env::args` and run; returns the process exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Testable entry point over explicit arguments.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_internal() {
                2
            } else {
                1
            }
        }
    }
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Tau { limit, common } => cmd_tau(RunConfig::new(limit, limit, &common)),
        Command::Angles { limit, common } => cmd_angles(RunConfig::new(limit, limit, &common)),
        Command::Satotate {
            limit,
            bins,
            svg,
            common,
        } => cmd_satotate(RunConfig::new(limit, limit, &common), bins, svg),
        Command::Character {
            poly,
            decompose,
            unitary,
            sign,
            grid,
        } => cmd_character(&poly, decompose, unitary, &sign, grid),
        Command::Classify { poly } => cmd_classify(&poly),
        Command::Lfun {
            spec,
            s,
            cutoff,
            common,
        } => cmd_lfun(RunConfig::new(cutoff, cutoff, &common), &spec, &s),
        Command::Verify {
            identity,
            cutoff,
            max_m,
            common,
        } => cmd_verify(RunConfig::new(cutoff, cutoff, &common), &identity, max_m),
        Command::Boundary {
            poly,
            sign,
            cutoff,
            svg,
            common,
        } => cmd_boundary(RunConfig::new(cutoff, cutoff, &common), &poly, &sign, svg),
    }
}

/// Write `text` to the configured output (file or stdout).
fn emit(config: &RunConfig, text: &str) -> Result<()> {
    match &config.out {
        Some(path) => std::fs::write(path, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_tau(config: RunConfig) -> Result<()> {
    let table = load_or_build_tau(config.cache_dir.as_deref(), config.limit)?;
    let text = match config.format {
        OutputFormat::Csv => {
            let mut text = String::from("n,tau\n");
            for (n, tau) in table.iter() {
                text.push_str(&format!("{n},{tau}\n"));
            }
            text
        }
        OutputFormat::Json => {
            // Decimal strings: tau overflows 64-bit integers quickly.
            let rows: Vec<serde_json::Value> = table
                .iter()
                .map(|(n, tau)| serde_json::json!({ "n": n, "tau": tau.to_string() }))
                .collect();
            serde_json::to_string_pretty(&rows).expect("serializable") + "\n"
        }
    };
    emit(&config, &text)
}

fn cmd_angles(config: RunConfig) -> Result<()> {
    let angles =
        load_or_build_angles(config.cache_dir.as_deref(), config.limit, config.cutoff)?;
    let text = match config.format {
        OutputFormat::Csv => {
            let mut text = String::from("p,a,theta\n");
            for e in angles.entries() {
                text.push_str(&format!("{},{},{}\n", e.p, e.a, e.theta));
            }
            text
        }
        OutputFormat::Json => {
            serde_json::to_string_pretty(angles.entries()).expect("serializable") + "\n"
        }
    };
    emit(&config, &text)
}

fn cmd_satotate(config: RunConfig, bins: usize, svg: Option<PathBuf>) -> Result<()> {
    let angles =
        load_or_build_angles(config.cache_dir.as_deref(), config.limit, config.cutoff)?;
    let report = satotate_test(&angles, bins)?;
    if let Some(path) = svg {
        std::fs::write(&path, histogram_svg(&report))?;
    }
    let text = match config.format {
        OutputFormat::Csv => {
            let mut text = String::from("lo,hi,count,model_mass\n");
            for b in &report.bins {
                text.push_str(&format!("{},{},{},{}\n", b.lo, b.hi, b.count, b.model_mass));
            }
            text.push_str(&format!("# sup_distance,{}\n", report.sup_distance));
            text
        }
        OutputFormat::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
    };
    emit(&config, &text)
}

fn cmd_character(
    poly: &str,
    decompose: bool,
    unitary: bool,
    sign: &str,
    grid: usize,
) -> Result<()> {
    let f: IntPolynomial = poly.parse()?;
    let h = from_polynomial(&f);
    // With no mode flags, print the decomposition.
    if decompose || !unitary {
        println!("{f} = {h}");
    }
    if unitary {
        let family = DegreeTwoFamily {
            sign: Sign::parse(sign)?,
            h,
        };
        match unitarity_test(&family, grid)? {
            UnitarityVerdict::Unitary => println!("UNITARY: |h(theta)| <= 2 on [0, pi]"),
            UnitarityVerdict::NonUnitary { theta, value } => {
                println!("NON-UNITARY: witness theta={theta:.9}, h(theta)={value:.9}")
            }
            UnitarityVerdict::BoundaryAmbiguous { theta, value } => println!(
                "BOUNDARY-AMBIGUOUS: max |h| = {value:.12} at theta={theta:.9} is within 1e-9 of 2 and carries no exact certificate"
            ),
        }
    }
    Ok(())
}

fn cmd_classify(poly: &str) -> Result<()> {
    let f: IntPolynomial = poly.parse()?;
    match classify(&f)? {
        Classification::Unitary { degree } => {
            println!("UNITARY m={degree}, Z^±(s,f)=Z_{degree}^±(s)");
            println!("meromorphic continuation to all of C");
        }
        Classification::NonUnitary { witness, value } => {
            println!("NON-UNITARY witness x0={witness}, f(x0)={value}");
            println!("natural boundary Re(s)=0");
        }
    }
    Ok(())
}

fn cmd_lfun(config: RunConfig, spec: &str, s_text: &str) -> Result<()> {
    let spec = EulerProductSpec::parse(spec)?;
    let s = parse_complex(s_text)?;
    let angles =
        load_or_build_angles(config.cache_dir.as_deref(), config.limit, config.cutoff)?;
    let value = truncated_product(&spec, s, config.cutoff, &angles)?;
    let text = match config.format {
        OutputFormat::Csv => format!(
            "re,im,cutoff,sigma,tail_hint\n{},{},{},{},{}\n",
            value.re, value.im, value.cutoff, value.sigma, value.tail_hint
        ),
        OutputFormat::Json => serde_json::to_string_pretty(&value).expect("serializable") + "\n",
    };
    emit(&config, &text)
}

fn cmd_verify(config: RunConfig, identity: &str, max_m: u32) -> Result<()> {
    let angles =
        load_or_build_angles(config.cache_dir.as_deref(), config.limit, config.cutoff)?;

    let mut rows: Vec<LocalIdentity> = Vec::new();
    match identity {
        "all" => {
            rows.push(LocalIdentity::ZetaSquares);
            rows.push(LocalIdentity::ZOnePlus);
            for m in 2..=max_m {
                rows.push(LocalIdentity::SymMinus { m });
                rows.push(LocalIdentity::SymPlus { m });
            }
            rows.push(LocalIdentity::Shimura);
        }
        "sym-minus" => {
            for m in 2..=max_m {
                rows.push(LocalIdentity::SymMinus { m });
            }
        }
        "sym-plus" => {
            for m in 2..=max_m {
                rows.push(LocalIdentity::SymPlus { m });
            }
        }
        name => rows.push(LocalIdentity::parse(name, None)?),
    }

    let mut all_pass = true;
    let mut worst: (f64, u64) = (0.0, 0);
    println!("identity            max_error      cutoff  status");
    for identity in rows {
        let mut max_error = 0.0f64;
        let mut at_p = 0;
        for e in angles.entries() {
            if e.p > config.cutoff {
                break;
            }
            let r = verify_local_identity(identity, e.p, &angles)?;
            if r.max_coefficient_error > max_error {
                max_error = r.max_coefficient_error;
                at_p = e.p;
            }
        }
        let pass = max_error <= IDENTITY_TOLERANCE;
        all_pass &= pass;
        if max_error > worst.0 {
            worst = (max_error, at_p);
        }
        println!(
            "{:<18}  {max_error:.3e}     {:>7}  {}",
            identity.to_string(),
            config.cutoff,
            if pass { "pass" } else { "FAIL" }
        );
    }
    if !all_pass {
        return Err(Error::IdentityCheckFailed {
            p: worst.1,
            max_error: worst.0,
        });
    }
    Ok(())
}

fn cmd_boundary(
    config: RunConfig,
    poly: &str,
    sign: &str,
    svg: Option<PathBuf>,
) -> Result<()> {
    let f: IntPolynomial = poly.parse()?;
    let sign = Sign::parse(sign)?;
    let angles =
        load_or_build_angles(config.cache_dir.as_deref(), config.limit, config.cutoff)?;
    let cloud = zero_cloud(&f, sign, config.cutoff, &angles)?;
    let summary = cloud_summary(&cloud)?;
    if let Some(path) = svg {
        std::fs::write(&path, scatter_svg(&cloud))?;
    }
    let text = match config.format {
        OutputFormat::Csv => {
            let mut text = String::from("p,root_modulus,sigma,t\n");
            for pt in &cloud {
                text.push_str(&format!(
                    "{},{},{},{}\n",
                    pt.p, pt.root_modulus, pt.sigma, pt.t
                ));
            }
            text
        }
        OutputFormat::Json => {
            let doc = serde_json::json!({ "points": cloud, "summary": summary });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
    };
    emit(&config, &text)
}

/// Locale-independent complex parsing: `RE` or `RE,IM`.
fn parse_complex(text: &str) -> Result<Complex64> {
    let bad = || Error::BadComplex(text.to_string());
    match text.split_once(',') {
        Some((re, im)) => {
            let re = re.trim().parse::<f64>().map_err(|_| bad())?;
            let im = im.trim().parse::<f64>().map_err(|_| bad())?;
            Ok(Complex64::new(re, im))
        }
        None => {
            let re = text.trim().parse::<f64>().map_err(|_| bad())?;
            Ok(Complex64::new(re, 0.0))
        }
    }
}
