//! Quotient rings `GF(2)[t]/(g)` and `(Z/4)[t]/(G)` behind one trait, plus the
//! generic power and geometric-sum routines.

use super::gf2::{mul_words, square_words, trim, xor_into, Gf2Poly};
use crate::error::{invalid, Result};
use crate::work::WorkCounters;
use std::fmt::Debug;

/// A commutative ring generated by `t`. Operations are pure; callers tally
/// multiplications in [`WorkCounters`].
pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }
    /// `a·t`.
    fn mul_t(&self, a: &Self::Elem) -> Self::Elem;
}

/// `t^n` by left-to-right square-and-multiply.
pub fn pow_t<R: Ring>(ring: &R, n: u64, work: &mut WorkCounters) -> R::Elem {
    let mut acc = ring.one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        acc = ring.square(&acc);
        work.ring_muls += 1;
        if (n >> bit) & 1 == 1 {
            acc = ring.mul_t(&acc);
        }
    }
    acc
}

/// `u^k` by binary exponentiation.
pub fn pow<R: Ring>(ring: &R, u: &R::Elem, k: u64, work: &mut WorkCounters) -> R::Elem {
    let mut acc = ring.one();
    for bit in (0..u64::BITS - k.leading_zeros()).rev() {
        acc = ring.square(&acc);
        work.ring_muls += 1;
        if (k >> bit) & 1 == 1 {
            acc = ring.mul(&acc, u);
            work.ring_muls += 1;
        }
    }
    acc
}

/// `Σ_{0 ≤ i < k} u^i` by doubling: `S_{2j} = S_j + u^j·S_j`, `S_{2j+1} = S_{2j} + u^{2j}`.
pub fn geo_sum<R: Ring>(ring: &R, u: &R::Elem, k: u64, work: &mut WorkCounters) -> R::Elem {
    let mut sum = ring.zero();
    let mut power = ring.one();
    for bit in (0..u64::BITS - k.leading_zeros()).rev() {
        sum = ring.add(&sum, &ring.mul(&power, &sum));
        power = ring.square(&power);
        work.ring_muls += 2;
        if (k >> bit) & 1 == 1 {
            sum = ring.add(&sum, &power);
            power = ring.mul(&power, u);
            work.ring_muls += 1;
        }
    }
    sum
}

/// Reduction context for `GF(2)[t]/(g)`. `g` need not be irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientCtx {
    g: Gf2Poly,
    deg: usize,
    /// `g·t^s` for `s = 0..64`, so any shift of `g` is a word-aligned XOR.
    shifted: Vec<Vec<u64>>,
}

impl QuotientCtx {
    pub fn new(g: Gf2Poly) -> Result<Self> {
        let deg = match g.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(invalid("modulus must have degree at least 1")),
        };
        let shifted = (0..64).map(|s| g.shl(s).into_words()).collect();
        Ok(QuotientCtx { g, deg, shifted })
    }

    /// `g = t^q − 1` (that is `t^q + 1` over GF(2)).
    pub fn cyclic(q: u64) -> Result<Self> {
        if q == 0 {
            return Err(invalid("cyclic modulus needs q ≥ 1"));
        }
        QuotientCtx::new(Gf2Poly::from_exponents([0, q as usize]))
    }

    pub fn modulus(&self) -> &Gf2Poly {
        &self.g
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    fn reduce_words(&self, mut words: Vec<u64>) -> Gf2Poly {
        let d = self.deg;
        let mut top = words.len();
        while top > 0 {
            let w = words[top - 1];
            if w == 0 {
                top -= 1;
                continue;
            }
            let k = (top - 1) * 64 + 63 - w.leading_zeros() as usize;
            if k < d {
                break;
            }
            let shift = k - d;
            xor_into(&mut words, &self.shifted[shift % 64], shift / 64);
        }
        trim(&mut words);
        Gf2Poly::from_words(words)
    }

    pub fn qreduce(&self, p: &Gf2Poly) -> Gf2Poly {
        self.reduce_words(p.words().to_vec())
    }

    pub fn qadd(&self, a: &Gf2Poly, b: &Gf2Poly) -> Gf2Poly {
        self.qreduce(&a.add(b))
    }

    pub fn qmul(&self, a: &Gf2Poly, b: &Gf2Poly) -> Gf2Poly {
        self.reduce_words(mul_words(a.words(), b.words()))
    }

    pub fn qpow_t(&self, n: u64, work: &mut WorkCounters) -> Gf2Poly {
        pow_t(self, n, work)
    }

    pub fn geo_sum(&self, u: &Gf2Poly, k: u64, work: &mut WorkCounters) -> Gf2Poly {
        geo_sum(self, u, k, work)
    }
}

impl Ring for QuotientCtx {
    type Elem = Gf2Poly;

    fn zero(&self) -> Gf2Poly {
        Gf2Poly::zero()
    }

    fn one(&self) -> Gf2Poly {
        self.qreduce(&Gf2Poly::one())
    }

    fn add(&self, a: &Gf2Poly, b: &Gf2Poly) -> Gf2Poly {
        a.add(b)
    }

    fn sub(&self, a: &Gf2Poly, b: &Gf2Poly) -> Gf2Poly {
        a.add(b)
    }

    fn mul(&self, a: &Gf2Poly, b: &Gf2Poly) -> Gf2Poly {
        self.qmul(a, b)
    }

    fn square(&self, a: &Gf2Poly) -> Gf2Poly {
        self.reduce_words(square_words(a.words()))
    }

    fn mul_t(&self, a: &Gf2Poly) -> Gf2Poly {
        self.qreduce(&a.shl(1))
    }
}

/// Polynomial with `Z/4` coefficients stored as two bit planes:
/// coefficient `i` is `lo_i + 2·hi_i`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Z4Poly {
    pub lo: Gf2Poly,
    pub hi: Gf2Poly,
}

impl Z4Poly {
    pub fn zero() -> Self {
        Z4Poly::default()
    }

    /// `2·p` for a 0/1 polynomial `p`.
    pub fn double_of(p: Gf2Poly) -> Self {
        Z4Poly { lo: Gf2Poly::zero(), hi: p }
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.lo.coeff(i) as u8 + 2 * self.hi.coeff(i) as u8
    }

    pub fn is_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }

    fn add(&self, other: &Z4Poly) -> Z4Poly {
        let mut lo = self.lo.words().to_vec();
        let mut hi = self.hi.words().to_vec();
        add_planes(&mut lo, &mut hi, other.lo.words(), other.hi.words(), 0);
        Z4Poly { lo: Gf2Poly::from_words(lo), hi: Gf2Poly::from_words(hi) }
    }

    fn neg(&self) -> Z4Poly {
        // −(l + 2h) = l + 2(h ⊕ l)
        Z4Poly { lo: self.lo.clone(), hi: self.hi.add(&self.lo) }
    }

    /// Multiply by an integer constant.
    pub fn scale(&self, k: i64) -> Z4Poly {
        match k.rem_euclid(4) {
            0 => Z4Poly::zero(),
            1 => self.clone(),
            2 => Z4Poly::double_of(self.lo.clone()),
            _ => self.neg(),
        }
    }
}

impl Debug for Z4Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Z4Poly({:?} + 2·({:?}))", self.lo, self.hi)
    }
}

/// `(lo, hi) += (src_lo, src_hi)·t^(64·offset)` coefficientwise mod 4.
fn add_planes(lo: &mut Vec<u64>, hi: &mut Vec<u64>, src_lo: &[u64], src_hi: &[u64], offset: usize) {
    let n = offset + src_lo.len().max(src_hi.len());
    if lo.len() < n {
        lo.resize(n, 0);
    }
    if hi.len() < n {
        hi.resize(n, 0);
    }
    for i in 0..n - offset {
        let sl = src_lo.get(i).copied().unwrap_or(0);
        let sh = src_hi.get(i).copied().unwrap_or(0);
        let l = lo[offset + i];
        lo[offset + i] = l ^ sl;
        hi[offset + i] ^= sh ^ (l & sl);
    }
}

/// `(Z/4)[t]/(G)` where `G` is the 0/1 lift of a GF(2) modulus. Any monic
/// lift works for recovering results mod 2.
#[derive(Debug, Clone)]
pub struct Z4Ctx {
    base: QuotientCtx,
}

impl Z4Ctx {
    pub fn new(base: &QuotientCtx) -> Self {
        Z4Ctx { base: base.clone() }
    }

    pub fn reduce(&self, p: &Z4Poly) -> Z4Poly {
        self.reduce_planes(p.lo.words().to_vec(), p.hi.words().to_vec())
    }

    fn reduce_planes(&self, mut lo: Vec<u64>, mut hi: Vec<u64>) -> Z4Poly {
        let d = self.base.deg;
        let n = lo.len().max(hi.len());
        lo.resize(n, 0);
        hi.resize(n, 0);
        let zeros = vec![0u64; self.base.shifted[0].len() + 1];
        let mut top = n;
        while top > 0 {
            let w = lo[top - 1] | hi[top - 1];
            if w == 0 {
                top -= 1;
                continue;
            }
            let k = (top - 1) * 64 + 63 - w.leading_zeros() as usize;
            if k < d {
                break;
            }
            let c = ((lo[k / 64] >> (k % 64)) & 1) + 2 * ((hi[k / 64] >> (k % 64)) & 1);
            let shift = k - d;
            let gs = &self.base.shifted[shift % 64];
            let zs = &zeros[..gs.len()];
            // subtract c·G·t^shift
            match c {
                1 => add_planes(&mut lo, &mut hi, gs, gs, shift / 64), // + 3G
                2 => add_planes(&mut lo, &mut hi, zs, gs, shift / 64), // + 2G
                _ => add_planes(&mut lo, &mut hi, gs, zs, shift / 64), // + G
            }
        }
        Z4Poly { lo: Gf2Poly::from_words(lo), hi: Gf2Poly::from_words(hi) }
    }

    /// Integer convolution of two 0/1 polynomials, mod 4.
    fn conv01(a: &Gf2Poly, b: &Gf2Poly) -> (Vec<u64>, Vec<u64>) {
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        if b.is_zero() {
            return (lo, hi);
        }
        for (wi, &w) in a.words().iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let i = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let shifted = b.shl(i % 64);
                add_planes(&mut lo, &mut hi, shifted.words(), &[], i / 64);
            }
        }
        (lo, hi)
    }
}

impl Ring for Z4Ctx {
    type Elem = Z4Poly;

    fn zero(&self) -> Z4Poly {
        Z4Poly::zero()
    }

    fn one(&self) -> Z4Poly {
        self.reduce(&Z4Poly { lo: Gf2Poly::one(), hi: Gf2Poly::zero() })
    }

    fn add(&self, a: &Z4Poly, b: &Z4Poly) -> Z4Poly {
        a.add(b)
    }

    fn sub(&self, a: &Z4Poly, b: &Z4Poly) -> Z4Poly {
        a.add(&b.neg())
    }

    fn mul(&self, a: &Z4Poly, b: &Z4Poly) -> Z4Poly {
        // (l1 + 2h1)(l2 + 2h2) = l1·l2 + 2(l1·h2 + h1·l2)  (mod 4)
        let (mut lo, mut hi) = Z4Ctx::conv01(&a.lo, &b.lo);
        let cross = mul_words(a.lo.words(), b.hi.words());
        xor_into(&mut hi, &cross, 0);
        let cross = mul_words(a.hi.words(), b.lo.words());
        xor_into(&mut hi, &cross, 0);
        trim(&mut lo);
        self.reduce_planes(lo, hi)
    }

    fn mul_t(&self, a: &Z4Poly) -> Z4Poly {
        self.reduce(&Z4Poly { lo: a.lo.shl(1), hi: a.hi.shl(1) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(w: Vec<u64>) -> Gf2Poly {
        Gf2Poly::from_words(w)
    }

    /// Dense integer-coefficient model for Z/4 checks.
    fn to_ints(p: &Z4Poly, len: usize) -> Vec<i64> {
        (0..len).map(|i| p.coeff(i) as i64).collect()
    }

    fn int_rem_mod4(mut c: Vec<i64>, g: &Gf2Poly) -> Vec<i64> {
        let dg = g.degree().unwrap();
        for k in (dg..c.len()).rev() {
            let lead = c[k].rem_euclid(4);
            if lead != 0 {
                for j in 0..=dg {
                    if g.coeff(j) {
                        c[k - dg + j] -= lead;
                    }
                }
            }
        }
        c.iter().map(|v| v.rem_euclid(4)).collect()
    }

    #[test]
    fn quotient_examples() {
        let ctx = QuotientCtx::new(Gf2Poly::from_exponents([0, 1, 2])).unwrap();
        let t = Gf2Poly::monomial(1);
        assert_eq!(ctx.qmul(&t, &t), Gf2Poly::from_exponents([0, 1]));
        assert!(ctx.qadd(&t, &t).is_zero());
        assert!(QuotientCtx::new(Gf2Poly::one()).is_err());
        assert!(QuotientCtx::new(Gf2Poly::zero()).is_err());
        assert!(QuotientCtx::cyclic(0).is_err());
    }

    #[test]
    fn qpow_examples() {
        let mut w = WorkCounters::default();
        let ctx = QuotientCtx::cyclic(13).unwrap();
        assert_eq!(ctx.qpow_t(0, &mut w), Gf2Poly::one());
        assert_eq!(ctx.qpow_t(13, &mut w), Gf2Poly::one());
        assert_eq!(ctx.qpow_t(13 * 1_000_000_007 + 5, &mut w), Gf2Poly::monomial(5));
        // against iterated multiplication by t, random degree-64 modulus
        let g = poly(vec![0x9e37_79b9_7f4a_7c15, 1]);
        let ctx = QuotientCtx::new(g).unwrap();
        let mut acc = Gf2Poly::one();
        for n in 0..=10_000u64 {
            assert_eq!(ctx.qpow_t(n, &mut w), acc, "n = {n}");
            acc = ctx.mul_t(&acc);
        }
        // log-many multiplications
        let mut w = WorkCounters::default();
        ctx.qpow_t(1_000_000_000_000, &mut w);
        assert_eq!(w.ring_muls, 40);
    }

    #[test]
    fn exponent_reduction_by_order() {
        // t has order 2^d − 1 modulo a primitive polynomial; t^16 + t^5 + t^3 + t^2 + 1 is primitive
        let ctx = QuotientCtx::new(Gf2Poly::from_exponents([0, 2, 3, 5, 16])).unwrap();
        let order = (1u64 << 16) - 1;
        let mut w = WorkCounters::default();
        let n = 1_000_000_000_000u64;
        assert_eq!(ctx.qpow_t(n, &mut w), ctx.qpow_t(n % order, &mut w));
        assert_eq!(ctx.qpow_t(order, &mut w), Gf2Poly::one());
    }

    #[test]
    fn geo_sum_examples() {
        let mut w = WorkCounters::default();
        let ctx = QuotientCtx::new(Gf2Poly::from_exponents([0, 1, 3])).unwrap();
        let t = Gf2Poly::monomial(1);
        assert!(ctx.geo_sum(&t, 0, &mut w).is_zero());
        assert_eq!(ctx.geo_sum(&t, 1, &mut w), Gf2Poly::one());
        let naive = ctx.qreduce(&Gf2Poly::from_exponents(0..5));
        assert_eq!(ctx.geo_sum(&t, 5, &mut w), naive);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn qmul_matches_schoolbook(gw in proptest::collection::vec(any::<u64>(), 1..4),
                                   a in proptest::collection::vec(any::<u64>(), 0..4),
                                   b in proptest::collection::vec(any::<u64>(), 0..4)) {
            let g = poly(gw);
            prop_assume!(g.degree().unwrap_or(0) >= 1);
            let ctx = QuotientCtx::new(g.clone()).unwrap();
            let (a, b) = (poly(a).rem_naive(&g), poly(b).rem_naive(&g));
            prop_assert_eq!(ctx.qmul(&a, &b), a.mul(&b).rem_naive(&g));
        }

        #[test]
        fn geo_sum_matches_accumulation(gw in 2u64.., uw in any::<u64>(), k in 0u64..300) {
            let g = poly(vec![gw]);
            let ctx = QuotientCtx::new(g.clone()).unwrap();
            let u = poly(vec![uw]).rem_naive(&g);
            let mut acc = Gf2Poly::zero();
            let mut p = ctx.one();
            for _ in 0..k {
                acc.add_assign(&p);
                p = ctx.qmul(&p, &u);
            }
            prop_assert_eq!(ctx.geo_sum(&u, k, &mut WorkCounters::default()), acc);
        }

        #[test]
        fn z4_mul_matches_integer_model(gw in 2u64..1 << 20,
                                        al in any::<u32>(), ah in any::<u32>(),
                                        bl in any::<u32>(), bh in any::<u32>()) {
            let g = poly(vec![gw]);
            let base = QuotientCtx::new(g.clone()).unwrap();
            let z4 = Z4Ctx::new(&base);
            let a = Z4Poly { lo: poly(vec![al as u64]), hi: poly(vec![ah as u64]) };
            let b = Z4Poly { lo: poly(vec![bl as u64]), hi: poly(vec![bh as u64]) };
            let (ai, bi) = (to_ints(&a, 32), to_ints(&b, 32));
            let mut prod = vec![0i64; 64];
            for i in 0..32 {
                for j in 0..32 {
                    prod[i + j] += ai[i] * bi[j];
                }
            }
            let want = int_rem_mod4(prod, &g);
            let got = z4.mul(&a, &b);
            prop_assert_eq!(to_ints(&got, 64), want);
            let sum = z4.sub(&z4.add(&got, &a), &a);
            prop_assert_eq!(to_ints(&sum, 64), to_ints(&got, 64));
            for k in -3i64..=3 {
                let scaled = a.scale(k);
                let want: Vec<i64> = ai.iter().map(|c| (c * k).rem_euclid(4)).collect();
                prop_assert_eq!(to_ints(&scaled, 32), want);
            }
        }
    }
}
