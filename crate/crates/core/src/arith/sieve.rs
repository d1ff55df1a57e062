use super::isqrt;
use crate::error::{invalid, Error, Result};
use crate::work::WorkCounters;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorRecord {
    pub mu: i8,
    pub tau: u32,
    pub omega: u8,
    /// Smallest prime divisor; 1 for `n = 1`.
    pub least_prime_factor: u64,
}

/// Factorisation data for every `n` in `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorTable {
    lo: u64,
    values: Vec<FactorRecord>,
}

impl FactorTable {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.lo + self.values.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> &FactorRecord {
        &self.values[(n - self.lo) as usize]
    }

    pub fn mu(&self, n: u64) -> i8 {
        self.get(n).mu
    }

    pub fn records(&self) -> &[FactorRecord] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &FactorRecord)> + '_ {
        self.values.iter().enumerate().map(move |(i, r)| (self.lo + i as u64, r))
    }
}

/// Primes up to `limit` by a plain sieve of Eratosthenes.
pub(crate) fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for p in 2..=limit {
        if composite[p] {
            continue;
        }
        primes.push(p as u64);
        let mut m = p * p;
        while m <= limit {
            composite[m] = true;
            m += p;
        }
    }
    primes
}

pub fn sieve_range(lo: u64, hi: u64) -> Result<FactorTable> {
    sieve_range_with(lo, hi, crate::Config::default().sieve_budget, &mut WorkCounters::default())
}

/// Segmented factor sieve over `[lo, hi]`. Only primes up to `√hi` are
/// generated, so a large `lo` costs nothing extra.
pub fn sieve_range_with(lo: u64, hi: u64, budget: u64, work: &mut WorkCounters) -> Result<FactorTable> {
    if lo == 0 || lo > hi {
        return Err(invalid(format!("sieve range [{lo}, {hi}] must satisfy 1 ≤ lo ≤ hi")));
    }
    let root = isqrt(hi);
    let cells = (hi - lo + 1).saturating_add(root);
    if cells > budget {
        return Err(Error::ResourceLimit { cells, budget });
    }
    let len = (hi - lo + 1) as usize;
    let mut rem: Vec<u64> = (lo..=hi).collect();
    let mut values = vec![FactorRecord { mu: 1, tau: 1, omega: 0, least_prime_factor: 0 }; len];
    for p in small_primes(root) {
        let start = lo.div_ceil(p) * p;
        let mut m = start;
        while m <= hi {
            let i = (m - lo) as usize;
            let mut e = 0u32;
            while rem[i].is_multiple_of(p) {
                rem[i] /= p;
                e += 1;
            }
            let rec = &mut values[i];
            rec.tau *= e + 1;
            rec.omega += 1;
            rec.mu = if e > 1 { 0 } else { -rec.mu };
            if rec.least_prime_factor == 0 {
                rec.least_prime_factor = p;
            }
            m += p;
        }
    }
    for (rec, &r) in values.iter_mut().zip(&rem) {
        // what is left is 1 or a single prime above √hi
        if r > 1 {
            rec.tau *= 2;
            rec.omega += 1;
            rec.mu = -rec.mu;
            if rec.least_prime_factor == 0 {
                rec.least_prime_factor = r;
            }
        } else if rec.least_prime_factor == 0 {
            rec.least_prime_factor = 1;
        }
    }
    work.sieve_cells += cells;
    Ok(FactorTable { lo, values })
}

/// `μ(n)` by trial division.
pub fn mobius_trial(mut n: u64) -> i8 {
    let mut mu = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// `τ(n)` by trial division.
pub fn tau_trial(mut n: u64) -> u64 {
    let mut tau = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        tau *= e + 1;
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        tau *= 2;
    }
    tau
}
