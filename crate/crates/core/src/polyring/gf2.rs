use std::fmt;

/// Dense polynomial over GF(2); bit `i` of the word vector is the
/// coefficient of `t^i`. No trailing zero words are kept.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { words: Vec::new() }
    }

    pub fn one() -> Self {
        Gf2Poly { words: vec![1] }
    }

    pub fn monomial(e: usize) -> Self {
        let mut words = vec![0u64; e / 64 + 1];
        words[e / 64] = 1 << (e % 64);
        Gf2Poly { words }
    }

    pub fn from_words(mut words: Vec<u64>) -> Self {
        trim(&mut words);
        Gf2Poly { words }
    }

    /// Sum of `t^e` over the given exponents (repeats cancel).
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = Gf2Poly::zero();
        for e in exps {
            p.flip(e);
        }
        p
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn into_words(self) -> Vec<u64> {
        self.words
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn flip(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
        trim(&mut self.words);
    }

    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Gf2Poly) {
        xor_into(&mut self.words, &other.words, 0);
        trim(&mut self.words);
    }

    /// Carry-less product, unreduced.
    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        Gf2Poly::from_words(mul_words(&self.words, &other.words))
    }

    pub fn square(&self) -> Gf2Poly {
        Gf2Poly::from_words(square_words(&self.words))
    }

    pub fn shl(&self, k: usize) -> Gf2Poly {
        if self.is_zero() {
            return Gf2Poly::zero();
        }
        let mut words = vec![0u64; k / 64];
        words.extend_from_slice(&self.words);
        words.push(0);
        shl_bits(&mut words[k / 64..], k % 64);
        Gf2Poly::from_words(words)
    }

    /// Remainder by schoolbook long division, one bit at a time.
    pub fn rem_naive(&self, g: &Gf2Poly) -> Gf2Poly {
        let dg = g.degree().expect("division by zero polynomial");
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            r.add_assign(&g.shl(dr - dg));
        }
        r
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let deg = self.degree().unwrap();
        let mut first = true;
        for i in (0..=deg).rev().filter(|&i| self.coeff(i)) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn trim(words: &mut Vec<u64>) {
    while words.last() == Some(&0) {
        words.pop();
    }
}

/// `dst[offset..] ^= src`, growing `dst` as needed.
pub(crate) fn xor_into(dst: &mut Vec<u64>, src: &[u64], offset: usize) {
    if dst.len() < offset + src.len() {
        dst.resize(offset + src.len(), 0);
    }
    for (d, s) in dst[offset..].iter_mut().zip(src) {
        *d ^= s;
    }
}

fn shl_bits(words: &mut [u64], bits: usize) {
    if bits == 0 {
        return;
    }
    for i in (0..words.len()).rev() {
        let below = if i > 0 { words[i - 1] >> (64 - bits) } else { 0 };
        words[i] = (words[i] << bits) | below;
    }
}

pub(crate) fn mul_words(a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let (lo, hi) = clmul(x, y);
            out[i + j] ^= lo;
            out[i + j + 1] ^= hi;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn square_words(a: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(2 * a.len());
    for &w in a {
        out.push(spread(w as u32));
        out.push(spread((w >> 32) as u32));
    }
    trim(&mut out);
    out
}

/// Interleave zero bits: bit `i` moves to bit `2i`.
fn spread(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

/// 64×64 → 128-bit carry-less product, 4-bit window.
pub(crate) fn clmul_soft(a: u64, b: u64) -> (u64, u64) {
    let mut table = [(0u64, 0u64); 16];
    table[1] = (a, 0);
    table[2] = (a << 1, a >> 63);
    table[4] = (a << 2, a >> 62);
    table[8] = (a << 3, a >> 61);
    for k in 3..16usize {
        if k.is_power_of_two() {
            continue;
        }
        let low = k & k.wrapping_neg();
        let (l1, h1) = table[low];
        let (l2, h2) = table[k ^ low];
        table[k] = (l1 ^ l2, h1 ^ h2);
    }
    let (mut lo, mut hi) = (0u64, 0u64);
    for nib in (0..16).rev() {
        hi = (hi << 4) | (lo >> 60);
        lo <<= 4;
        let (tl, th) = table[((b >> (nib * 4)) & 15) as usize];
        lo ^= tl;
        hi ^= th;
    }
    (lo, hi)
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "pclmulqdq,sse2,sse4.1")]
unsafe fn clmul_hw(a: u64, b: u64) -> (u64, u64) {
    use std::arch::x86_64::*;
    let va = _mm_set_epi64x(0, a as i64);
    let vb = _mm_set_epi64x(0, b as i64);
    let r = _mm_clmulepi64_si128(va, vb, 0x00);
    (_mm_cvtsi128_si64(r) as u64, _mm_extract_epi64(r, 1) as u64)
}

#[inline]
pub(crate) fn clmul(a: u64, b: u64) -> (u64, u64) {
    #[cfg(target_arch = "x86_64")]
    {
        if std::arch::is_x86_feature_detected!("pclmulqdq") && std::arch::is_x86_feature_detected!("sse4.1") {
            // SAFETY: the required CPU features were detected at runtime.
            return unsafe { clmul_hw(a, b) };
        }
    }
    clmul_soft(a, b)
}
