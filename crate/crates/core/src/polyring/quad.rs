use super::matrix::{strassen_mul, RingMatrix};
use super::ring::{pow_t, Ring};
use crate::arith::icbrt;
use crate::config::Config;
use crate::error::{invalid, Result};
use crate::work::WorkCounters;
use serde::{Deserialize, Serialize};

/// `xx·x² + xy·x·y + yy·y² + x·x + y·y + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BiQuad {
    pub xx: i128,
    pub xy: i128,
    pub yy: i128,
    pub x: i128,
    pub y: i128,
    pub c: i128,
}

impl BiQuad {
    pub fn eval(&self, x: i128, y: i128) -> i128 {
        self.xx * x * x + self.xy * x * y + self.yy * y * y + self.x * x + self.y * y + self.c
    }
}

/// `E(i + Qj + Q²k) = U(i,j) + V(j,k) + W(k,i)` for digits `0 ≤ i,j,k < Q`,
/// with every part nonnegative on that cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadSplit {
    pub cube_side: u64,
    pub u: BiQuad,
    pub v: BiQuad,
    pub w: BiQuad,
}

/// A digit `d` or its complement `Q − 1 − d`, as `sign·d + offset`.
#[derive(Clone, Copy)]
struct Digit {
    sign: i128,
    offset: i128,
}

#[derive(Clone, Copy, PartialEq)]
enum Var {
    X,
    Y,
}

impl QuadSplit {
    fn empty(cube_side: u64) -> Self {
        QuadSplit { cube_side, u: BiQuad::default(), v: BiQuad::default(), w: BiQuad::default() }
    }

    /// Which part holds digit `p` (0 = i, 1 = j, 2 = k) and in which variable,
    /// given the other digit of the product.
    fn route(&mut self, p: usize, q: usize) -> (&mut BiQuad, Var, Var) {
        let var = |d: usize, first: usize| if d == first { Var::X } else { Var::Y };
        match (p.min(q), p.max(q)) {
            (0, 0) | (0, 1) | (1, 1) => (&mut self.u, var(p, 0), var(q, 0)),
            (1, 2) | (2, 2) => (&mut self.v, var(p, 1), var(q, 1)),
            _ => (&mut self.w, var(p, 2), var(q, 2)),
        }
    }

    /// Add `coef·(s1·d_p + o1)·(s2·d_q + o2)`.
    fn add_product(&mut self, coef: i128, p: usize, dp: Digit, q: usize, dq: Digit) {
        let (part, vp, vq) = self.route(p, q);
        let (sq, cross) = (coef * dp.sign * dq.sign, coef);
        match (vp, vq) {
            (Var::X, Var::X) => part.xx += sq,
            (Var::Y, Var::Y) => part.yy += sq,
            _ => part.xy += sq,
        }
        let lin = |part: &mut BiQuad, v: Var, amount: i128| match v {
            Var::X => part.x += amount,
            Var::Y => part.y += amount,
        };
        lin(part, vp, cross * dp.sign * dq.offset);
        lin(part, vq, cross * dq.sign * dp.offset);
        part.c += cross * dp.offset * dq.offset;
    }

    fn add_linear(&mut self, coef: i128, p: usize, dp: Digit) {
        let one = Digit { sign: 0, offset: 1 };
        self.add_product(coef, p, dp, p, one);
    }

    /// Add `coef·X(m)·Y(m)` where `X`, `Y` are `m` or `M − m` written in digits.
    fn add_square(&mut self, coef: i128, fx: &[Digit; 3], fy: &[Digit; 3]) {
        let side = self.cube_side as i128;
        for (p, &dp) in fx.iter().enumerate() {
            for (q, &dq) in fy.iter().enumerate() {
                self.add_product(coef * side.pow((p + q) as u32), p, dp, q, dq);
            }
        }
    }

    fn add_number(&mut self, coef: i128, f: &[Digit; 3]) {
        let side = self.cube_side as i128;
        for (p, &d) in f.iter().enumerate() {
            self.add_linear(coef * side.pow(p as u32), p, d);
        }
    }

    pub fn eval(&self, i: u64, j: u64, k: u64) -> i128 {
        let (i, j, k) = (i as i128, j as i128, k as i128);
        self.u.eval(i, j) + self.v.eval(j, k) + self.w.eval(k, i)
    }
}

/// Split `a2·m² + a1·m + a0` over the cube `m < Q³` so that every part is
/// nonnegative. Requires `a1 ≥ 0` whenever `a2 ≥ 0`.
pub fn quad_split(a2: i128, a1: i128, a0: i128, cube_side: u64) -> QuadSplit {
    let side = cube_side as i128;
    let plain = [Digit { sign: 1, offset: 0 }; 3];
    let complement = [Digit { sign: -1, offset: side - 1 }; 3];
    let mut split = QuadSplit::empty(cube_side);
    if a2 >= 0 {
        split.add_square(a2, &plain, &plain);
        split.add_number(a1, &plain);
        split.u.c += a0;
    } else {
        // −α m² = α·m·(M − m) − α·M·m with M = Q³ − 1
        let top = side.pow(3) - 1;
        split.add_square(-a2, &plain, &complement);
        let slope = a1 + a2 * top;
        if slope >= 0 {
            split.add_number(slope, &plain);
            split.u.c += a0;
        } else {
            split.add_number(-slope, &complement);
            split.u.c += slope * top + a0;
        }
    }
    split
}

fn eval_quad(a2: i128, a1: i128, a0: i128, m: i128) -> i128 {
    (a2 * m + a1) * m + a0
}

/// `Σ_{0≤m<q} t^(a2·m² + a1·m + a0)` in `ring`, through `tr(ABC)` on the
/// largest cube `Q³ ≤ q` with the tail summed term by term.
pub fn quad_exp_sum<R: Ring>(
    ring: &R,
    a2: i64,
    a1: i64,
    a0: i64,
    q: u64,
    cfg: &Config,
    work: &mut WorkCounters,
) -> Result<R::Elem> {
    let (a2, a1, a0) = (a2 as i128, a1 as i128, a0 as i128);
    if q == 0 {
        return Ok(ring.zero());
    }
    let last = q as i128 - 1;
    let mut extremes = vec![eval_quad(a2, a1, a0, 0), eval_quad(a2, a1, a0, last)];
    if a2 != 0 {
        let v = (-a1).div_euclid(2 * a2).clamp(0, last);
        extremes.push(eval_quad(a2, a1, a0, v));
        extremes.push(eval_quad(a2, a1, a0, (v + 1).min(last)));
    }
    if extremes.iter().any(|&e| e < 0) {
        return Err(invalid("quadratic exponent is negative somewhere on the range"));
    }
    if extremes.iter().any(|&e| e > u64::MAX as i128) {
        return Err(invalid("quadratic exponent exceeds 64 bits"));
    }
    if a2 >= 0 && a1 < 0 {
        // decreasing up to the vertex: reflect that part
        let m1 = if a2 == 0 { q as i128 } else { ((-a1 + 2 * a2 - 1) / (2 * a2)).min(q as i128) };
        let e_before = eval_quad(a2, a1, a0, m1 - 1);
        let mut total = cube_sum(ring, a2, -2 * a2 * (m1 - 1) - a1, e_before, m1 as u64, cfg, work);
        if (m1 as u64) < q {
            let e_at = eval_quad(a2, a1, a0, m1);
            let forward = cube_sum(ring, a2, 2 * a2 * m1 + a1, e_at, q - m1 as u64, cfg, work);
            total = ring.add(&total, &forward);
        }
        return Ok(total);
    }
    Ok(cube_sum(ring, a2, a1, a0, q, cfg, work))
}

fn cube_sum<R: Ring>(ring: &R, a2: i128, a1: i128, a0: i128, q: u64, cfg: &Config, work: &mut WorkCounters) -> R::Elem {
    let side = icbrt(q);
    let term = |m: u64, work: &mut WorkCounters| pow_t(ring, eval_quad(a2, a1, a0, m as i128) as u64, work);
    if side < cfg.min_cube_side.max(2) {
        return (0..q).fold(ring.zero(), |acc, m| ring.add(&acc, &term(m, work)));
    }
    let split = quad_split(a2, a1, a0, side);
    let dim = side as usize;
    let mut monomials =
        |f: &BiQuad| RingMatrix::from_fn(dim, |r, c| pow_t(ring, f.eval(r as i128, c as i128) as u64, work));
    let a = monomials(&split.u);
    let b = monomials(&split.v);
    let c = monomials(&split.w);
    let ab = strassen_mul(ring, &a, &b, cfg.strassen_cutoff, work).expect("equal dimensions");
    let mut total = ring.zero();
    for i in 0..dim {
        for k in 0..dim {
            total = ring.add(&total, &ring.mul(ab.get(i, k), c.get(k, i)));
        }
    }
    work.ring_muls += (dim * dim) as u64;
    for m in side * side * side..q {
        total = ring.add(&total, &term(m, work));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Gf2Poly, QuotientCtx};
    use proptest::prelude::*;

    fn naive(ctx: &QuotientCtx, a2: i64, a1: i64, a0: i64, q: u64) -> Gf2Poly {
        let mut w = WorkCounters::default();
        (0..q as i128).fold(Gf2Poly::zero(), |acc, m| {
            let e = eval_quad(a2 as i128, a1 as i128, a0 as i128, m) as u64;
            acc.add(&ctx.qpow_t(e, &mut w))
        })
    }

    fn cfg(cutoff: usize) -> Config {
        Config { strassen_cutoff: cutoff, ..Config::default() }
    }

    #[test]
    fn small_examples() {
        let ctx = QuotientCtx::cyclic(7).unwrap();
        let mut w = WorkCounters::default();
        let got = quad_exp_sum(&ctx, 1, 0, 0, 3, &Config::default(), &mut w).unwrap();
        assert_eq!(got, Gf2Poly::from_exponents([0, 1, 4]));
        for q in 1..30 {
            let got = quad_exp_sum(&ctx, 0, 0, 5, q, &Config::default(), &mut w).unwrap();
            let want = if q % 2 == 1 { Gf2Poly::monomial(5) } else { Gf2Poly::zero() };
            assert_eq!(got, want);
        }
        assert!(quad_exp_sum(&ctx, 0, -1, 3, 5, &Config::default(), &mut w).is_err());
        assert!(quad_exp_sum(&ctx, -1, 0, 10, 5, &Config::default(), &mut w).is_err());
    }

    #[test]
    fn strassen_route_matches_naive() {
        let ctx = QuotientCtx::new(Gf2Poly::from_words(vec![0xdead_beef_1234_5679, 1])).unwrap();
        let mut w = WorkCounters::default();
        for (a2, a1, a0, q) in [(3, 7, 11, 1000), (-2, 4000, 5, 1500), (5, -9000, 5_000_000, 1999), (0, -3, 6000, 2000)]
        {
            let got = quad_exp_sum(&ctx, a2, a1, a0, q, &cfg(2), &mut w).unwrap();
            assert_eq!(got, naive(&ctx, a2, a1, a0, q), "({a2},{a1},{a0},{q})");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn split_identity(a2 in -1000i128..1000, a1 in 0i128..1_000_000, a0 in 0i128..1000, side in 2u64..40,
                          digits in proptest::collection::vec((0u64..40, 0u64..40, 0u64..40), 50)) {
            let top = (side as i128).pow(3) - 1;
            // keep the exponent nonnegative on the cube when concave
            let a1 = if a2 < 0 { a1 - a2 * top } else { a1 };
            let split = quad_split(a2, a1, a0, side);
            for (i, j, k) in digits {
                let (i, j, k) = (i % side, j % side, k % side);
                let m = (i + side * j + side * side * k) as i128;
                prop_assert_eq!(split.eval(i, j, k), eval_quad(a2, a1, a0, m));
                prop_assert!(split.u.eval(i as i128, j as i128) >= 0);
                prop_assert!(split.v.eval(j as i128, k as i128) >= 0);
                prop_assert!(split.w.eval(k as i128, i as i128) >= 0);
            }
        }

        #[test]
        fn matches_naive(a2 in 0i64..1000, a1 in -1_000_000i64..1_000_000, a0 in 0i64..1_000_000,
                         q in 1u64..300, concave in any::<bool>(), gw in 2u64..) {
            let ctx = QuotientCtx::new(Gf2Poly::from_words(vec![gw])).unwrap();
            let (a2, a1) = if concave { (-a2, a1.abs() + 2 * a2 * q as i64) } else { (a2, a1) };
            let a0 = a0 + if a1 < 0 { a1.unsigned_abs() as i64 * q as i64 } else { 0 };
            let mut w = WorkCounters::default();
            let got = quad_exp_sum(&ctx, a2, a1, a0, q, &cfg(1), &mut w).unwrap();
            prop_assert_eq!(got, naive(&ctx, a2, a1, a0, q));
        }
    }
}
