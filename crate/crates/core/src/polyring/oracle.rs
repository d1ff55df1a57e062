//! Brute-force twins of the fast polynomial routines.

use super::gf2::Gf2Poly;
use super::ring::{pow_t, QuotientCtx, Ring, Z4Ctx, Z4Poly};
use crate::arith::{primes_in, sieve_range, Interval};
use crate::work::WorkCounters;

/// `Σ t^p` over the primes of the interval, one exponentiation per prime.
pub fn prime_poly_oracle(interval: Interval, ctx: &QuotientCtx) -> Gf2Poly {
    let mut w = WorkCounters::default();
    primes_in(interval).into_iter().fold(Gf2Poly::zero(), |acc, p| acc.add(&ctx.qpow_t(p, &mut w)))
}

/// Per-class prime-count parities from the sieve.
pub fn residue_parity_oracle(interval: Interval, q: u64) -> Vec<bool> {
    let mut bits = vec![false; q as usize];
    for p in primes_in(interval) {
        bits[(p % q) as usize] ^= true;
    }
    bits
}

/// `Σ_{a<n≤b} τ(n)·t^n` mod `(2, g)` from sieved divisor counts.
pub fn tau_weighted_oracle(a: u64, b: u64, ctx: &QuotientCtx) -> Gf2Poly {
    let mut w = WorkCounters::default();
    if a == b {
        return Gf2Poly::zero();
    }
    let table = sieve_range(a + 1, b).expect("valid range");
    let mut monomial = ctx.qpow_t(a + 1, &mut w);
    let mut acc = Gf2Poly::zero();
    for (_, r) in table.iter() {
        if r.tau % 2 == 1 {
            acc.add_assign(&monomial);
        }
        monomial = ctx.mul_t(&monomial);
    }
    acc
}

/// `Σ_{a<n≤b} τ(n)·t^(scale·n)` mod `(4, G)`.
pub fn tau_weighted_z4_oracle(a: u64, b: u64, scale: u64, z4: &Z4Ctx) -> Z4Poly {
    let mut w = WorkCounters::default();
    if a == b {
        return Z4Poly::zero();
    }
    let table = sieve_range(a + 1, b).expect("valid range");
    let step = pow_t(z4, scale, &mut w);
    let mut monomial = pow_t(z4, scale * (a + 1), &mut w);
    let mut acc = Z4Poly::zero();
    for (_, r) in table.iter() {
        acc = z4.add(&acc, &monomial.scale(r.tau as i64));
        monomial = z4.mul(&monomial, &step);
    }
    acc
}

/// `Σ_{0≤m<q} t^(a2·m² + a1·m + a0)` term by term.
pub fn quad_exp_sum_oracle<R: Ring>(ring: &R, a2: i64, a1: i64, a0: i64, q: u64) -> R::Elem {
    let mut w = WorkCounters::default();
    (0..q as i128).fold(ring.zero(), |acc, m| {
        let e = (a2 as i128 * m + a1 as i128) * m + a0 as i128;
        ring.add(&acc, &pow_t(ring, e as u64, &mut w))
    })
}
