//! Parity of the prime count on an interval, via `Σ 2^ω(n)`.
//!
//! For `n > 1`, `2^ω(n) ≡ 2 (mod 4)` exactly when `n` is a prime power and
//! `≡ 0` otherwise, so half the sum counts prime powers mod 2.

use crate::arith::{iroot, is_prime, isqrt, mobius_trial, sieve_range_with, tau_trial, Interval};
use crate::config::{pow_floor, Config, LargeDMode};
use crate::error::Result;
use crate::hyperbola::divisor_summatory_with;
use crate::work::WorkCounters;
use serde::{Deserialize, Serialize};

/// Counts of `p^j ∈ [a, b]` for `j ≥ 2`; `counts[0]` is `j = 2`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PrimePowerCounts {
    pub counts: Vec<u64>,
}

impl PrimePowerCounts {
    /// Count for exponent `j` (zero for `j < 2` or beyond the table).
    pub fn get(&self, j: u32) -> u64 {
        if j < 2 {
            return 0;
        }
        self.counts.get(j as usize - 2).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityBreakdown {
    pub two_omega_sum: u64,
    pub prime_power_counts: PrimePowerCounts,
    pub parity: bool,
}

/// Largest `d` whose `μ(d)` comes from the sieve.
pub(crate) fn small_d_limit(b: u64, cfg: &Config) -> u64 {
    let root = isqrt(b);
    match cfg.large_d_mode {
        LargeDMode::Sieve => root,
        LargeDMode::Paper => pow_floor(b, cfg.large_d_exponent).clamp(1, root.max(1)),
    }
}

/// `d` in `(limit, √(b/m)]` with `d²·m ≥ a`.
pub(crate) fn large_d_range(a: u64, b: u64, m: u64, limit: u64) -> (u64, u64) {
    let need = a.div_ceil(m); // d² ≥ ⌈a/m⌉
    let lo = (isqrt(need - 1) + 1).max(limit + 1);
    (lo, isqrt(b / m))
}

/// Exact `Σ_{a≤n≤b} 2^ω(n)`.
pub fn two_omega_sum(interval: Interval, cfg: &Config, work: &mut WorkCounters) -> Result<u64> {
    let (a, b) = (interval.a(), interval.b());
    let limit = small_d_limit(b, cfg);
    let mu = sieve_range_with(1, limit, cfg.sieve_budget, work)?;
    let mut total: i128 = 0;
    for (d, rec) in mu.iter() {
        if rec.mu == 0 {
            continue;
        }
        let d2 = d * d;
        let (hi, lo) = (b / d2, (a - 1) / d2);
        if hi == lo {
            continue;
        }
        let diff = divisor_summatory_with(hi, cfg, work)? - divisor_summatory_with(lo, cfg, work)?;
        total += rec.mu as i128 * diff as i128;
    }
    // d > limit: swap to an outer sum over m = n/d², factoring d directly
    let m_max = b / ((limit + 1) * (limit + 1));
    for m in 1..=m_max {
        let (lo, hi) = large_d_range(a, b, m, limit);
        if lo > hi {
            continue;
        }
        let mu_sum: i64 = (lo..=hi).map(|d| mobius_trial(d) as i64).sum();
        if mu_sum != 0 {
            total += tau_trial(m) as i128 * mu_sum as i128;
        }
    }
    u64::try_from(total).map_err(|_| crate::Error::Internal(format!("negative 2^ω sum {total}")))
}

/// Every `(p, j)` with `j ≥ 2`, `p` prime and `p^j ∈ [a, b]`.
pub fn prime_powers(interval: Interval) -> Vec<(u64, u32)> {
    let (a, b) = (interval.a(), interval.b());
    let mut out = Vec::new();
    for j in 2..=(63 - b.leading_zeros()) {
        let lo = iroot(a - 1, j).expect("j ≥ 2") + 1;
        let hi = iroot(b, j).expect("j ≥ 2");
        out.extend((lo..=hi).filter(|&p| is_prime(p)).map(|p| (p, j)));
    }
    out
}

/// Counts of prime powers `p^j ∈ [a, b]` for `2 ≤ j ≤ log₂ b`.
pub fn prime_power_correction(interval: Interval) -> PrimePowerCounts {
    let top = (63 - interval.b().leading_zeros()).max(1);
    let mut counts = vec![0; top as usize - 1];
    for (_, j) in prime_powers(interval) {
        counts[j as usize - 2] += 1;
    }
    PrimePowerCounts { counts }
}

pub fn parity_breakdown(interval: Interval, cfg: &Config, work: &mut WorkCounters) -> Result<ParityBreakdown> {
    let sum = two_omega_sum(interval, cfg, work)?;
    if sum % 2 != 0 {
        return Err(crate::Error::Internal(format!("2^ω sum {sum} is odd")));
    }
    let counts = prime_power_correction(interval);
    let parity = (sum / 2 + counts.total()) % 2 == 1;
    Ok(ParityBreakdown { two_omega_sum: sum, prime_power_counts: counts, parity })
}

/// Parity of the number of primes in `[a, b]`.
pub fn pi_parity_interval(interval: Interval, cfg: &Config, work: &mut WorkCounters) -> Result<bool> {
    work.parity_queries += 1;
    parity_breakdown(interval, cfg, work).map(|p| p.parity)
}
