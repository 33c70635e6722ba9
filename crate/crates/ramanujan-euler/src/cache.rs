//! On-disk persistence of computed tables.
//!
//! Tau tables serialize as CSV with decimal-string values (they overflow
//! 64-bit integers quickly) and reload bit-identically. Angle tables
//! serialize as CSV with shortest-round-trip floats, so reloading is also
//! exact. A corrupt or missing cache file is never an error: the table is
//! recomputed (with a warning on corruption) and the file rewritten.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::satotate::{build_angles, AngleTable, PrimeAngle};
use crate::tau::{expand_delta, TauTable};

/// Environment variable that supplies a cache directory when no flag does.
pub const CACHE_DIR_ENV: &str = "RAMANUJAN_EULER_CACHE";

/// Resolve the cache directory: an explicit flag wins, then the
/// environment variable, then no caching at all.
pub fn resolve_cache_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
}

fn tau_path(dir: &Path, limit: u64) -> PathBuf {
    dir.join(format!("tau-{limit}.csv"))
}

fn angles_path(dir: &Path, cutoff: u64) -> PathBuf {
    dir.join(format!("angles-{cutoff}.csv"))
}

/// Load the tau table for `limit` from the cache, or compute and store it.
/// With `dir = None` this is just [`expand_delta`].
pub fn load_or_build_tau(dir: Option<&Path>, limit: u64) -> Result<TauTable> {
    let Some(dir) = dir else {
        return expand_delta(limit);
    };
    let path = tau_path(dir, limit);
    if path.exists() {
        match read_tau(&path, limit) {
            Ok(table) => return Ok(table),
            Err(e) => eprintln!("warning: ignoring corrupt cache {}: {e}", path.display()),
        }
    }
    let table = expand_delta(limit)?;
    if let Err(e) = write_tau(&path, &table) {
        eprintln!("warning: could not write cache {}: {e}", path.display());
    }
    Ok(table)
}

/// Load the angle table for `cutoff` from the cache, or compute and store
/// it. `table_limit` bounds the tau table built on a cache miss.
pub fn load_or_build_angles(
    dir: Option<&Path>,
    table_limit: u64,
    cutoff: u64,
) -> Result<AngleTable> {
    if let Some(dir) = dir {
        let path = angles_path(dir, cutoff);
        if path.exists() {
            match read_angles(&path, cutoff) {
                Ok(table) => return Ok(table),
                Err(e) => {
                    eprintln!("warning: ignoring corrupt cache {}: {e}", path.display())
                }
            }
        }
        let tau = load_or_build_tau(Some(dir), table_limit)?;
        let angles = build_angles(&tau, cutoff)?;
        if let Err(e) = write_angles(&path, &angles) {
            eprintln!("warning: could not write cache {}: {e}", path.display());
        }
        Ok(angles)
    } else {
        let tau = expand_delta(table_limit)?;
        build_angles(&tau, cutoff)
    }
}

pub fn write_tau(path: &Path, table: &TauTable) -> Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent).map_err(|e| cache_io(path, e))?;
    }
    let mut text = String::from("n,tau\n");
    for (n, tau) in table.iter() {
        text.push_str(&format!("{n},{tau}\n"));
    }
    std::fs::write(path, text).map_err(|e| cache_io(path, e))
}

pub fn read_tau(path: &Path, expected_limit: u64) -> Result<TauTable> {
    let text = std::fs::read_to_string(path).map_err(|e| cache_io(path, e))?;
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 {
            if line != "n,tau" {
                return Err(corrupt(path, "bad header"));
            }
            continue;
        }
        let (n_text, tau_text) = line.split_once(',').ok_or_else(|| corrupt(path, "bad row"))?;
        let n: u64 = n_text.parse().map_err(|_| corrupt(path, "bad index"))?;
        if n != values.len() as u64 + 1 {
            return Err(corrupt(path, "indices not contiguous"));
        }
        let tau = BigInt::from_str(tau_text).map_err(|_| corrupt(path, "bad value"))?;
        values.push(tau);
    }
    if values.len() as u64 != expected_limit || values.first().map(|v| v != &BigInt::from(1)) == Some(true)
    {
        return Err(corrupt(path, "wrong length or tau(1) != 1"));
    }
    Ok(TauTable::from_values(values))
}

pub fn write_angles(path: &Path, table: &AngleTable) -> Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent).map_err(|e| cache_io(path, e))?;
    }
    let mut text = String::from("p,a,theta\n");
    for e in table.entries() {
        // `{}` prints the shortest string that round-trips exactly.
        text.push_str(&format!("{},{},{}\n", e.p, e.a, e.theta));
    }
    std::fs::write(path, text).map_err(|e| cache_io(path, e))
}

pub fn read_angles(path: &Path, expected_cutoff: u64) -> Result<AngleTable> {
    let text = std::fs::read_to_string(path).map_err(|e| cache_io(path, e))?;
    let mut entries: Vec<PrimeAngle> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 {
            if line != "p,a,theta" {
                return Err(corrupt(path, "bad header"));
            }
            continue;
        }
        let mut parts = line.split(',');
        let (p, a, theta) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
            (Some(p), Some(a), Some(t), None) => (p, a, t),
            _ => return Err(corrupt(path, "bad row")),
        };
        let p: u64 = p.parse().map_err(|_| corrupt(path, "bad prime"))?;
        let a: f64 = a.parse().map_err(|_| corrupt(path, "bad coefficient"))?;
        let theta: f64 = theta.parse().map_err(|_| corrupt(path, "bad angle"))?;
        if entries.last().is_some_and(|e| e.p >= p) {
            return Err(corrupt(path, "primes not increasing"));
        }
        entries.push(PrimeAngle { p, a, theta });
    }
    let count_expected = crate::primes::primes_up_to(expected_cutoff).len();
    if entries.len() != count_expected {
        return Err(corrupt(path, "wrong prime count"));
    }
    Ok(AngleTable::from_entries(entries, expected_cutoff))
}

fn cache_io(path: &Path, source: std::io::Error) -> Error {
    Error::CacheIo {
        path: path.to_path_buf(),
        source,
    }
}

fn corrupt(path: &Path, reason: &str) -> Error {
    Error::CacheIo {
        path: path.to_path_buf(),
        source: std::io::Error::new(std::io::ErrorKind::InvalidData, reason.to_string()),
    }
}
