use crate::arith::gcd;
use crate::error::{invalid, Result};

/// A rational `a/q` close to `x/n0²`, with the scaled error
/// `θ = qQ·(x/n0² − a/q)` kept as an exact fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirichletApprox {
    pub a: u64,
    pub q: u64,
    pub q_bound: u64,
    pub theta_num: i128,
    pub theta_den: u128,
}

impl DirichletApprox {
    /// `|x/n0² − a/q| ≤ 1/(qQ)` checked by cross-multiplication.
    pub fn is_valid_for(&self, x: u64, n0: u64) -> bool {
        let n2 = n0 as u128 * n0 as u128;
        let err = (x as u128 * self.q as u128).abs_diff(self.a as u128 * n2);
        self.q >= 1
            && self.q <= self.q_bound
            && gcd(self.a as u128, self.q as u128) == 1
            && err * self.q_bound as u128 <= n2
    }
}

/// Last continued-fraction convergent of `x/n0²` whose denominator is at most `q_bound`.
pub fn dirichlet_approx(x: u64, n0: u64, q_bound: u64) -> Result<DirichletApprox> {
    if n0 == 0 || q_bound == 0 {
        return Err(invalid("dirichlet_approx needs n0 ≥ 1 and Q ≥ 1"));
    }
    let n2 = n0 as u128 * n0 as u128;
    let (mut num, mut den) = (x as u128, n2);
    // (h, k) convergents: previous two
    let (mut h1, mut h2) = (1u128, 0u128);
    let (mut k1, mut k2) = (0u128, 1u128);
    let (mut best_h, mut best_k) = (0u128, 1u128);
    while den != 0 {
        let digit = num / den;
        let h = digit.checked_mul(h1).and_then(|v| v.checked_add(h2));
        let k = digit.checked_mul(k1).and_then(|v| v.checked_add(k2));
        match (h, k) {
            (Some(h), Some(k)) if k <= q_bound as u128 => {
                best_h = h;
                best_k = k;
                h2 = h1;
                h1 = h;
                k2 = k1;
                k1 = k;
            }
            _ => break,
        }
        let r = num - digit * den;
        num = den;
        den = r;
    }
    let a = best_h as u64;
    let q = best_k as u64;
    let diff = x as i128 * q as i128 - a as i128 * n2 as i128;
    let mut theta_num = diff * q_bound as i128;
    let mut theta_den = n2;
    let g = gcd(theta_num.unsigned_abs(), theta_den);
    if g > 1 {
        theta_num /= g as i128;
        theta_den /= g;
    }
    Ok(DirichletApprox { a, q, q_bound, theta_num, theta_den })
}
