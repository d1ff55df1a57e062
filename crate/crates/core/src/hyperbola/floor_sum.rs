use super::dirichlet::dirichlet_approx;
use crate::arith::{icbrt, isqrt};
use crate::config::Config;
use crate::error::{check_bound, Result};
use crate::work::WorkCounters;

/// `Σ_{0 ≤ i < n} ⌊(a·i + b)/m⌋` for `m > 0` and any signs of `a`, `b`.
pub fn floor_sum_linear(n: i128, m: i128, mut a: i128, mut b: i128) -> i128 {
    assert!(m > 0, "modulus must be positive");
    if n <= 0 {
        return 0;
    }
    let mut acc = 0i128;
    if a < 0 {
        let a2 = a.rem_euclid(m);
        acc -= n * (n - 1) / 2 * ((a2 - a) / m);
        a = a2;
    }
    if b < 0 {
        let b2 = b.rem_euclid(m);
        acc -= n * ((b2 - b) / m);
        b = b2;
    }
    let (mut n, mut m) = (n, m);
    loop {
        if a >= m {
            acc += n * (n - 1) / 2 * (a / m);
            a %= m;
        }
        if b >= m {
            acc += n * (b / m);
            b %= m;
        }
        let y_max = a * n + b;
        if y_max < m {
            break;
        }
        n = y_max / m;
        b = y_max % m;
        std::mem::swap(&mut m, &mut a);
    }
    acc
}

fn direct(x: u64, n0: u64, len: u64, work: &mut WorkCounters) -> u128 {
    work.blocks += len;
    (n0..n0 + len).map(|n| (x / n) as u128).sum()
}

fn mod_inverse(a: u64, q: u64) -> u64 {
    let (mut r0, mut r1) = (q as i128, (a % q) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let t = r0 / r1;
        (r0, r1) = (r1, r0 - t * r1);
        (s0, s1) = (s1, s0 - t * s1);
    }
    debug_assert_eq!(r0, 1, "a and q must be coprime");
    s0.rem_euclid(q as i128) as u64
}

/// One chunk `n0 ≤ n < n0 + len` summed through the approximation
/// `⌊x/(n0+r)⌋ ≈ ⌊x/n0 − a·r/q⌋`.
///
/// The approximate terms form a linear floor sum. A term can differ from the
/// true one only when the residue `s = (⌊qx/n0⌋ − a·r) mod q` sits within `K`
/// of `0` or `q`, where `K ≥ q·max|error|`; those `r` are recomputed exactly.
/// Returns `None` when that exceptional set would cover every residue.
fn approx_chunk(x: u64, n0: u64, len: u64, a: u64, q: u64) -> Option<u128> {
    if q < 2 {
        return None;
    }
    let (x, n0w, len, aw, qw) = (x as u128, n0 as u128, len as u128, a as u128, q as u128);
    let n2 = n0w * n0w;
    let n3 = n2 * n0w;
    // q·|e_r| ≤ (L−1)·|xq − a·n0²|/n0² + q·x·(L−1)²/n0³
    let lin = (x * qw).abs_diff(aw * n2);
    let bound_num = (len - 1) * lin * n0w + qw * x * (len - 1) * (len - 1);
    let k = bound_num.div_ceil(n3);
    if 2 * k >= qw {
        return None;
    }
    let m = x * qw / n0w;
    let approx = floor_sum_linear(len as i128, qw as i128, -(aw as i128), m as i128);
    let inv = mod_inverse(a, q) as u128;
    let mut correction = 0i128;
    let bad = (0..k).chain(qw - k..qw);
    for s in bad {
        // a·r ≡ m − s (mod q)
        let r0 = ((m + qw - s) % qw) * inv % qw;
        let mut r = r0;
        while r < len {
            let exact = (x / (n0w + r)) as i128;
            let guess = (m as i128 - (aw * r) as i128).div_euclid(qw as i128);
            correction += exact - guess;
            r += qw;
        }
    }
    let total = approx + correction;
    debug_assert!(total >= 0);
    Some(total as u128)
}

/// Exact `Σ_{n0 ≤ n < n0+len} ⌊x/n⌋`, processed in chunks of about `q_bound` terms.
fn block_sum(x: u64, n0: u64, len: u64, q_bound: u64, work: &mut WorkCounters) -> u128 {
    let end = n0 + len;
    let mut n = n0;
    let mut total = 0u128;
    while n < end {
        let approx = dirichlet_approx(x, n, q_bound).expect("n ≥ 1, Q ≥ 1");
        let q = approx.q;
        let chunk = (q_bound / q).max(1) * q;
        let chunk = chunk.min(end - n);
        match approx_chunk(x, n, chunk, approx.a, q) {
            Some(v) => {
                work.blocks += 1;
                total += v;
            }
            None => total += direct(x, n, chunk, work),
        }
        n += chunk;
    }
    total
}

pub fn floor_sum_block(x: u64, n0: u64, len: u64) -> u128 {
    floor_sum_block_with(x, n0, len, &Config::default(), &mut WorkCounters::default())
}

/// Exact `Σ_{n0 ≤ n < n0+len} ⌊x/n⌋`. Below `block_constant·x^(1/3)` the terms
/// are added one by one.
pub fn floor_sum_block_with(x: u64, n0: u64, len: u64, cfg: &Config, work: &mut WorkCounters) -> u128 {
    assert!(n0 >= 1, "n0 must be positive");
    if len == 0 {
        return 0;
    }
    let cbrt = icbrt(x).max(1);
    if n0 <= cfg.block_constant.saturating_mul(cbrt) {
        return direct(x, n0, len, work);
    }
    block_sum(x, n0, len, (n0 / cbrt).max(1), work)
}

pub fn floor_sum(x: u64) -> Result<u64> {
    floor_sum_with(x, &Config::default(), &mut WorkCounters::default())
}

/// `Σ_{n ≤ √x} ⌊x/n⌋` over dyadic ranges `[A, 2A)`, each summed in blocks of
/// about `A/x^(1/3)` terms.
pub fn floor_sum_with(x: u64, cfg: &Config, work: &mut WorkCounters) -> Result<u64> {
    check_bound(x)?;
    let s = isqrt(x);
    if s == 0 {
        return Ok(0);
    }
    let cbrt = icbrt(x).max(1);
    let small = s.min(cfg.block_constant.saturating_mul(cbrt));
    let mut total = direct(x, 1, small, work);
    let mut start = small + 1;
    while start <= s {
        let end = (2 * start - 1).min(s);
        let q_bound = (start / cbrt).max(1);
        total += block_sum(x, start, end - start + 1, q_bound, work);
        start = end + 1;
    }
    Ok(total as u64)
}

pub fn divisor_summatory(x: u64) -> Result<u64> {
    divisor_summatory_with(x, &Config::default(), &mut WorkCounters::default())
}

/// `D(x) = Σ_{n ≤ x} τ(n) = 2·Σ_{n ≤ √x} ⌊x/n⌋ − ⌊√x⌋²`.
pub fn divisor_summatory_with(x: u64, cfg: &Config, work: &mut WorkCounters) -> Result<u64> {
    let s = isqrt(x);
    Ok(2 * floor_sum_with(x, cfg, work)? - s * s)
}
