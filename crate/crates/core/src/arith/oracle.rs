//! Slow, obviously-correct reference computations.

use super::sieve::{sieve_range_with, small_primes};
use super::{isqrt, Interval};
use crate::error::{check_bound, Result};
use crate::work::WorkCounters;

const SEGMENT: u64 = 1 << 18;

/// All primes in `[a, b]`, by a segmented sieve.
pub fn primes_in(interval: Interval) -> Vec<u64> {
    let (a, b) = (interval.a(), interval.b());
    let base = small_primes(isqrt(b));
    let mut out = Vec::new();
    let mut lo = a;
    loop {
        let hi = b.min(lo.saturating_add(SEGMENT - 1));
        let mut composite = vec![false; (hi - lo + 1) as usize];
        for &p in &base {
            let start = (p * p).max(lo.div_ceil(p) * p);
            let mut m = start;
            while m <= hi {
                composite[(m - lo) as usize] = true;
                m += p;
            }
        }
        out.extend((lo..=hi).filter(|&n| !composite[(n - lo) as usize]));
        if hi == b {
            break;
        }
        lo = hi + 1;
    }
    out
}

/// `π(b) − π(a − 1)`.
pub fn pi_oracle(interval: Interval) -> u64 {
    primes_in(interval).len() as u64
}

/// `D(x) = Σ_{n ≤ x} τ(n)`, by summing `⌊x/n⌋` one term at a time up to `√x`.
pub fn tau_sum_oracle(x: u64) -> Result<u64> {
    check_bound(x)?;
    let s = isqrt(x);
    let half: u64 = (1..=s).map(|n| x / n).sum();
    Ok(2 * half - s * s)
}

/// `Σ_{a ≤ n ≤ b} 2^ω(n)` from a factor sieve, segment by segment.
pub fn two_omega_oracle(interval: Interval) -> Result<u64> {
    let mut total = 0u64;
    let mut lo = interval.a();
    let mut work = WorkCounters::default();
    loop {
        let hi = interval.b().min(lo.saturating_add(SEGMENT - 1));
        let table = sieve_range_with(lo, hi, u64::MAX, &mut work)?;
        total += table.records().iter().map(|r| 1u64 << r.omega).sum::<u64>();
        if hi == interval.b() {
            break;
        }
        lo = hi + 1;
    }
    Ok(total)
}
