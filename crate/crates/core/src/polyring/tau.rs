use super::gf2::Gf2Poly;
use super::quad::quad_exp_sum;
use super::ring::{geo_sum, pow_t, QuotientCtx, Ring, Z4Ctx, Z4Poly};
use crate::arith::isqrt;
use crate::config::{pow_floor, Config};
use crate::error::{check_bound, invalid, Result};
use crate::hyperbola::hyperbola_partition_pair;
use crate::work::WorkCounters;

/// `Σ_{a<n≤b} τ(n)·t^n` reduced mod `(2, g)`.
pub fn tau_weighted_poly(a: u64, b: u64, ctx: &QuotientCtx, cfg: &Config, work: &mut WorkCounters) -> Result<Gf2Poly> {
    let z4 = Z4Ctx::new(ctx);
    Ok(tau_weighted_poly_z4(a, b, 1, ctx, &z4, cfg, work)?.lo)
}

/// `Σ_{a<n≤b} τ(n)·t^(scale·n)` reduced mod `(4, G)`, `G` the 0/1 lift of `g`.
///
/// Counting pairs `nm ∈ (a, b]` on both sides of `√b` gives `2·F − C`, where
/// `F` runs over `n ≤ √b` and all `m`, and `C` is the corner with both
/// factors at most `√b`. Since `2·F` mod 4 only depends on `F` mod 2, `F` is
/// evaluated over GF(2) and only the small corner needs `Z/4`.
pub fn tau_weighted_poly_z4(
    a: u64,
    b: u64,
    scale: u64,
    ctx: &QuotientCtx,
    z4: &Z4Ctx,
    cfg: &Config,
    work: &mut WorkCounters,
) -> Result<Z4Poly> {
    if a > b {
        return Err(invalid(format!("empty range ({a}, {b}]")));
    }
    check_bound(b)?;
    if scale == 0 || (b as u128) * (scale as u128) > crate::MAX_ARG as u128 {
        return Err(invalid(format!("exponent scale {scale} out of range")));
    }
    if a == b {
        return Ok(Z4Poly::zero());
    }
    let first = first_sum(a, b, scale, ctx, cfg, work)?;
    let corner = corner_sum(a, b, scale, z4, work);
    Ok(z4.sub(&Z4Poly::double_of(first), &corner))
}

/// `t^(scale·n·m0)·(1 + t^(scale·n) + … )` with `len` terms.
fn row<R: Ring>(ring: &R, scale: u64, n: u64, m0: u64, len: u64, work: &mut WorkCounters) -> R::Elem {
    let start = pow_t(ring, scale * n * m0, work);
    let ratio = pow_t(ring, scale * n, work);
    work.ring_muls += 1;
    ring.mul(&start, &geo_sum(ring, &ratio, len, work))
}

fn first_sum(a: u64, b: u64, scale: u64, ctx: &QuotientCtx, cfg: &Config, work: &mut WorkCounters) -> Result<Gf2Poly> {
    let root = isqrt(b);
    let mut acc = Gf2Poly::zero();
    let add_row = |n: u64, acc: &mut Gf2Poly, work: &mut WorkCounters| {
        let (m0, m1) = (a / n + 1, b / n);
        if m0 <= m1 {
            acc.add_assign(&row(ctx, scale, n, m0, m1 - m0 + 1, work));
        }
    };
    if b - a > pow_floor(b, 0.5 + cfg.c) {
        for n in 1..=root {
            add_row(n, &mut acc, work);
        }
        return Ok(acc);
    }
    for piece in hyperbola_partition_pair(b, a, 1, root, cfg)? {
        let diff = piece.diff.expect("paired partition");
        if piece.count == 1 {
            add_row(piece.n0, &mut acc, work);
            continue;
        }
        // m = c_j + i·slope for n = n0 + i·step, one quadratic sum per j
        let (n0, step, slope) = (piece.n0 as i64, piece.step as i64, piece.slope);
        let s = scale as i64;
        for j in 0..diff {
            let c = (piece.v0 - diff + 1 + j) as i64;
            let sum =
                quad_exp_sum(ctx, s * step * slope, s * (n0 * slope + step * c), s * n0 * c, piece.count, cfg, work)?;
            acc.add_assign(&sum);
        }
    }
    Ok(acc)
}

/// Pairs `n, m ≤ √b` with `a < nm ≤ b`, one geometric row per `n`.
fn corner_sum(a: u64, b: u64, scale: u64, z4: &Z4Ctx, work: &mut WorkCounters) -> Z4Poly {
    let root = isqrt(b);
    let mut acc = Z4Poly::zero();
    for n in a / root + 1..=root {
        let m0 = a / n + 1;
        if m0 <= root {
            acc = z4.add(&acc, &row(z4, scale, n, m0, root - m0 + 1, work));
        }
    }
    acc
}
