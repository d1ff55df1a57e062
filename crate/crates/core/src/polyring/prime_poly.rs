use super::gf2::Gf2Poly;
use super::ring::{pow_t, QuotientCtx, Ring, Z4Ctx, Z4Poly};
use super::tau::tau_weighted_poly_z4;
use crate::arith::{mobius_trial, sieve_range_with, tau_trial, Interval};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::parity::{large_d_range, prime_powers, small_d_limit};
use crate::work::WorkCounters;

/// `Σ_{a≤p≤b} t^p` reduced mod `(2, g)`.
///
/// Works in `(Z/4)[t]/(G)`: `Σ 2^ω(n)·t^n ≡ 2·Σ_{p^j ∈ [a,b]} t^(p^j) (mod 4)`,
/// so after removing the `j ≥ 2` terms the low bit plane vanishes and the high
/// plane is the answer.
pub fn prime_poly_mod(interval: Interval, ctx: &QuotientCtx, cfg: &Config, work: &mut WorkCounters) -> Result<Gf2Poly> {
    let (a, b) = (interval.a(), interval.b());
    let z4 = Z4Ctx::new(ctx);
    let mut acc = Z4Poly::zero();
    // terms that enter with an even coefficient, accumulated mod 2 and doubled at the end
    let mut halves = Gf2Poly::zero();

    let limit = small_d_limit(b, cfg);
    let mu = sieve_range_with(1, limit, cfg.sieve_budget, work)?;
    for (d, rec) in mu.iter() {
        if rec.mu == 0 {
            continue;
        }
        let d2 = d * d;
        let (lo, hi) = ((a - 1) / d2, b / d2);
        if lo == hi {
            continue;
        }
        let part = tau_weighted_poly_z4(lo, hi, d2, ctx, &z4, cfg, work)?;
        acc = z4.add(&acc, &part.scale(rec.mu as i64));
    }

    let m_max = b / ((limit + 1) * (limit + 1));
    for m in 1..=m_max {
        let (lo, hi) = large_d_range(a, b, m, limit);
        if lo > hi {
            continue;
        }
        let tau = tau_trial(m) as i64;
        for d in lo..=hi {
            let coef = tau * mobius_trial(d) as i64;
            let e = d * d * m;
            match coef.rem_euclid(4) {
                0 => {}
                2 => halves.add_assign(&pow_t(ctx, e, work)),
                _ => acc = z4.add(&acc, &pow_t(&z4, e, work).scale(coef)),
            }
        }
    }

    // −2·t^(p^j) ≡ +2·t^(p^j) mod 4
    for (p, j) in prime_powers(interval) {
        halves.add_assign(&pow_t(ctx, p.pow(j), work));
    }
    acc = z4.add(&acc, &Z4Poly::double_of(halves));

    if !acc.lo.is_zero() {
        return Err(Error::Internal(format!("odd coefficients survived the mod-4 assembly on {interval}")));
    }
    Ok(acc.hi)
}

/// Bit `i` is the parity of `#{p ∈ [a, b] prime : p ≡ i (mod q)}`.
pub fn residue_class_parity(interval: Interval, q: u64, cfg: &Config, work: &mut WorkCounters) -> Result<Vec<bool>> {
    let ctx = QuotientCtx::cyclic(q)?;
    let poly = prime_poly_mod(interval, &ctx, cfg, work)?;
    Ok((0..q as usize).map(|i| poly.coeff(i)).collect())
}
