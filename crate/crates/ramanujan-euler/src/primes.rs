//! Segmented sieve of Eratosthenes.
//!
//! Odds-only segmented sieve with cache-sized segments. Deterministic output
//! (primes in increasing order) regardless of segment size.

/// Segment length in odd candidates; 1 << 15 bytes sits comfortably in L1/L2.
const SEGMENT_LEN: usize = 1 << 15;

/// All primes `p <= limit` in increasing order.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let mut primes = vec![2u64];
    if limit < 3 {
        return primes;
    }

    // Base primes up to sqrt(limit) by a plain odds-only sieve.
    let root = limit.isqrt() as usize;
    let base = small_odd_primes(root);

    // Sieve odd numbers in [3, limit] segment by segment.
    let mut seg = vec![false; SEGMENT_LEN];
    let mut low: u64 = 3; // first odd candidate of the current segment
    while low <= limit {
        let count = (((limit - low) / 2) as usize + 1).min(SEGMENT_LEN);
        let high = low + 2 * (count as u64 - 1);
        seg[..count].fill(false);

        for &p in &base {
            let p2 = p * p;
            if p2 > high {
                break;
            }
            // First odd multiple of p in [low, high] that is >= p^2.
            let mut start = p2.max(low.div_ceil(p) * p);
            if start % 2 == 0 {
                start += p;
            }
            let mut idx = ((start - low) / 2) as usize;
            while idx < count {
                seg[idx] = true;
                idx += p as usize;
            }
        }

        for (i, &composite) in seg[..count].iter().enumerate() {
            if !composite {
                primes.push(low + 2 * i as u64);
            }
        }
        low = high + 2;
    }
    primes
}

fn small_odd_primes(limit: usize) -> Vec<u64> {
    if limit < 3 {
        return Vec::new();
    }
    let n_odd = (limit - 1) / 2; // odd numbers 3, 5, ..., indexed by (n-3)/2
    let mut composite = vec![false; n_odd];
    let mut i = 0;
    while i < n_odd {
        if !composite[i] {
            let p = 2 * i + 3;
            let mut j = (p * p - 3) / 2;
            while j < n_odd {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    composite
        .iter()
        .enumerate()
        .filter(|(_, &c)| !c)
        .map(|(i, _)| (2 * i + 3) as u64)
        .collect()
}
