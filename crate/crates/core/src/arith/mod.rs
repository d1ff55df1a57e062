//! Integer primitives, primality, sieves and the brute-force oracles.

mod oracle;
mod primality;
mod sieve;

pub use oracle::{pi_oracle, primes_in, tau_sum_oracle, two_omega_oracle};
pub use primality::is_prime;
pub use sieve::{mobius_trial, sieve_range, sieve_range_with, tau_trial, FactorRecord, FactorTable};

use crate::error::{check_bound, invalid, Result};
use serde::{Deserialize, Serialize};

/// Closed range `[a, b]` with `2 ≤ a ≤ b ≤ 2^50`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    a: u64,
    b: u64,
}

impl Interval {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a < 2 {
            return Err(invalid(format!("interval start {a} must be at least 2")));
        }
        if a > b {
            return Err(invalid(format!("interval [{a}, {b}] is empty")));
        }
        check_bound(b)?;
        Ok(Interval { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn len(&self) -> u64 {
        self.b - self.a + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, n: u64) -> bool {
        self.a <= n && n <= self.b
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

/// True when `r^k > x`, without overflow.
fn pow_exceeds(r: u64, k: u32, x: u64) -> bool {
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc *= r as u128;
        if acc > x as u128 {
            return true;
        }
    }
    false
}

/// `⌊x^(1/k)⌋`, exact.
pub fn iroot(x: u64, k: u32) -> Result<u64> {
    if k == 0 {
        return Err(invalid("root index must be at least 1"));
    }
    if k == 1 || x < 2 {
        return Ok(x);
    }
    if k >= 64 {
        return Ok(1);
    }
    // float guess, then integer correction in both directions
    let mut r = (x as f64).powf(1.0 / k as f64) as u64;
    while r > 0 && pow_exceeds(r, k, x) {
        r -= 1;
    }
    while !pow_exceeds(r + 1, k, x) {
        r += 1;
    }
    Ok(r)
}

pub fn isqrt(x: u64) -> u64 {
    x.isqrt()
}

pub fn icbrt(x: u64) -> u64 {
    iroot(x, 3).expect("k = 3")
}

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
