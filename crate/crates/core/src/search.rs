//! Locating a prime in `(N, 2N]` by bisecting intervals of odd prime count.

use crate::arith::{is_prime, pi_oracle, Interval};
use crate::config::Config;
use crate::error::{invalid, Result};
use crate::parity::pi_parity_interval;
use crate::work::WorkCounters;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchTrace {
    /// Every parity query in the order issued, with its answer.
    pub queries: Vec<(Interval, bool)>,
    pub result: u64,
    pub fallback_used: bool,
}

/// `[lo, hi]` cut into `k` consecutive pieces whose lengths differ by at most one.
fn split(lo: u64, hi: u64, k: u64) -> Vec<(u64, u64)> {
    let len = (hi - lo + 1) as u128;
    let k = (k as u128).clamp(1, len);
    let start = |i: u128| lo + (i * len / k) as u64;
    (0..k).map(|i| (start(i), start(i + 1) - 1)).collect()
}

type ParityFn<'a> = dyn FnMut(Interval, &mut WorkCounters) -> Result<bool> + 'a;

fn first_odd(
    lo: u64,
    hi: u64,
    k: u64,
    parity: &mut ParityFn,
    work: &mut WorkCounters,
    queries: &mut Vec<(Interval, bool)>,
) -> Result<Option<Interval>> {
    for (a, b) in split(lo, hi, k) {
        let piece = Interval::new(a, b)?;
        let odd = parity(piece, work)?;
        queries.push((piece, odd));
        if odd {
            return Ok(Some(piece));
        }
    }
    Ok(None)
}

/// The first of `k` near-equal pieces of `[N, 2N]` holding an odd number of primes.
pub fn find_odd_subinterval(n: u64, k: u64, cfg: &Config, work: &mut WorkCounters) -> Result<Option<Interval>> {
    if n < 2 || k == 0 {
        return Err(invalid("need N ≥ 2 and K ≥ 1"));
    }
    first_odd(n, 2 * n, k, &mut |i, w| pi_parity_interval(i, cfg, w), work, &mut Vec::new())
}

/// A prime in `(N, 2N]`.
///
/// Start from an odd piece of `(N, 2N]`; keep the left half when it is odd and
/// the right half otherwise, so the interval always holds an odd (hence
/// nonzero) number of primes. Short intervals are scanned directly. If no
/// piece is odd, scan upward from `N + 1`.
pub fn find_prime_above(n: u64, cfg: &Config, work: &mut WorkCounters) -> Result<SearchTrace> {
    descend(n, cfg, work, &mut |i, w| pi_parity_interval(i, cfg, w))
}

/// [`find_prime_above`] with every parity taken from a sieve count.
pub fn find_prime_above_oracle(n: u64, cfg: &Config, work: &mut WorkCounters) -> Result<SearchTrace> {
    descend(n, cfg, work, &mut |i, w| {
        w.parity_queries += 1;
        Ok(pi_oracle(i) % 2 == 1)
    })
}

fn descend(n: u64, cfg: &Config, work: &mut WorkCounters, parity: &mut ParityFn) -> Result<SearchTrace> {
    if n < 2 {
        return Err(invalid("need N ≥ 2"));
    }
    crate::error::check_bound(2 * n)?;
    let mut queries = Vec::new();
    let Some(mut current) = first_odd(n + 1, 2 * n, cfg.initial_splits.max(1), parity, work, &mut queries)? else {
        let result = (n + 1..=2 * n).find(|&p| is_prime(p)).expect("Bertrand's postulate");
        return Ok(SearchTrace { queries, result, fallback_used: true });
    };
    while current.len() > cfg.direct_scan.max(1) {
        let (a, b) = (current.a(), current.b());
        let mid = a + (b - a) / 2;
        let left = Interval::new(a, mid)?;
        let odd = parity(left, work)?;
        queries.push((left, odd));
        current = if odd { left } else { Interval::new(mid + 1, b)? };
    }
    let result = (current.a()..=current.b())
        .find(|&p| is_prime(p))
        .ok_or_else(|| crate::Error::Internal(format!("no prime in odd-parity interval {current}")))?;
    Ok(SearchTrace { queries, result, fallback_used: false })
}
