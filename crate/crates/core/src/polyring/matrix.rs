use super::ring::Ring;
use crate::error::{invalid, Result};
use crate::work::WorkCounters;

/// Square matrix over a [`Ring`], row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RingMatrix<E> {
    dim: usize,
    entries: Vec<E>,
}

impl<E: Clone> RingMatrix<E> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        RingMatrix { dim, entries }
    }

    pub fn filled(dim: usize, value: E) -> Self {
        RingMatrix { dim, entries: vec![value; dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.entries[i * self.dim + j] = value;
    }

    /// `dim × dim` block starting at `(r, c)`, zero-filled past the edge.
    fn block(&self, r: usize, c: usize, dim: usize, zero: &E) -> Self {
        RingMatrix::from_fn(dim, |i, j| {
            if r + i < self.dim && c + j < self.dim {
                self.get(r + i, c + j).clone()
            } else {
                zero.clone()
            }
        })
    }
}

impl<E: Clone + PartialEq> RingMatrix<E> {
    pub fn identity<R: Ring<Elem = E>>(ring: &R, dim: usize) -> Self {
        RingMatrix::from_fn(dim, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn trace<R: Ring<Elem = E>>(&self, ring: &R) -> E {
        (0..self.dim).fold(ring.zero(), |acc, i| ring.add(&acc, self.get(i, i)))
    }
}

/// Triple-loop product; counts `dim³` ring multiplications.
pub fn naive_mul<R: Ring>(
    ring: &R,
    a: &RingMatrix<R::Elem>,
    b: &RingMatrix<R::Elem>,
    work: &mut WorkCounters,
) -> Result<RingMatrix<R::Elem>> {
    check_dims(a, b)?;
    Ok(naive(ring, a, b, work))
}

fn naive<R: Ring>(
    ring: &R,
    a: &RingMatrix<R::Elem>,
    b: &RingMatrix<R::Elem>,
    work: &mut WorkCounters,
) -> RingMatrix<R::Elem> {
    let n = a.dim;
    work.ring_muls += (n * n * n) as u64;
    RingMatrix::from_fn(n, |i, j| {
        (0..n).fold(ring.zero(), |acc, k| ring.add(&acc, &ring.mul(a.get(i, k), b.get(k, j))))
    })
}

fn check_dims<E>(a: &RingMatrix<E>, b: &RingMatrix<E>) -> Result<()> {
    if a.dim != b.dim {
        return Err(invalid(format!("matrix dimensions differ: {} vs {}", a.dim, b.dim)));
    }
    Ok(())
}

/// Strassen product, zero-padded to a power of two, falling back to the
/// triple loop at or below `cutoff`.
pub fn strassen_mul<R: Ring>(
    ring: &R,
    a: &RingMatrix<R::Elem>,
    b: &RingMatrix<R::Elem>,
    cutoff: usize,
    work: &mut WorkCounters,
) -> Result<RingMatrix<R::Elem>> {
    check_dims(a, b)?;
    let n = a.dim;
    let cutoff = cutoff.max(1);
    if n <= cutoff {
        return Ok(naive(ring, a, b, work));
    }
    let padded = n.next_power_of_two();
    let zero = ring.zero();
    let (pa, pb) =
        if padded == n { (a.clone(), b.clone()) } else { (a.block(0, 0, padded, &zero), b.block(0, 0, padded, &zero)) };
    let product = strassen_rec(ring, &pa, &pb, cutoff, work);
    Ok(if padded == n { product } else { product.block(0, 0, n, &zero) })
}

fn strassen_rec<R: Ring>(
    ring: &R,
    a: &RingMatrix<R::Elem>,
    b: &RingMatrix<R::Elem>,
    cutoff: usize,
    work: &mut WorkCounters,
) -> RingMatrix<R::Elem> {
    let n = a.dim;
    if n <= cutoff || n % 2 == 1 {
        return naive(ring, a, b, work);
    }
    let h = n / 2;
    let zero = ring.zero();
    let [a11, a12, a21, a22] = [(0, 0), (0, h), (h, 0), (h, h)].map(|(r, c)| a.block(r, c, h, &zero));
    let [b11, b12, b21, b22] = [(0, 0), (0, h), (h, 0), (h, h)].map(|(r, c)| b.block(r, c, h, &zero));
    let add = |x: &RingMatrix<R::Elem>, y: &RingMatrix<R::Elem>| zip(x, y, |p, q| ring.add(p, q));
    let sub = |x: &RingMatrix<R::Elem>, y: &RingMatrix<R::Elem>| zip(x, y, |p, q| ring.sub(p, q));

    let m1 = strassen_rec(ring, &add(&a11, &a22), &add(&b11, &b22), cutoff, work);
    let m2 = strassen_rec(ring, &add(&a21, &a22), &b11, cutoff, work);
    let m3 = strassen_rec(ring, &a11, &sub(&b12, &b22), cutoff, work);
    let m4 = strassen_rec(ring, &a22, &sub(&b21, &b11), cutoff, work);
    let m5 = strassen_rec(ring, &add(&a11, &a12), &b22, cutoff, work);
    let m6 = strassen_rec(ring, &sub(&a21, &a11), &add(&b11, &b12), cutoff, work);
    let m7 = strassen_rec(ring, &sub(&a12, &a22), &add(&b21, &b22), cutoff, work);

    let c11 = add(&sub(&add(&m1, &m4), &m5), &m7);
    let c12 = add(&m3, &m5);
    let c21 = add(&m2, &m4);
    let c22 = add(&add(&sub(&m1, &m2), &m3), &m6);
    RingMatrix::from_fn(n, |i, j| {
        let quad = match (i < h, j < h) {
            (true, true) => &c11,
            (true, false) => &c12,
            (false, true) => &c21,
            (false, false) => &c22,
        };
        quad.get(i % h, j % h).clone()
    })
}

fn zip<E: Clone>(x: &RingMatrix<E>, y: &RingMatrix<E>, f: impl Fn(&E, &E) -> E) -> RingMatrix<E> {
    RingMatrix { dim: x.dim, entries: x.entries.iter().zip(&y.entries).map(|(p, q)| f(p, q)).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Gf2Poly, QuotientCtx, Z4Ctx, Z4Poly};
    use rand::{Rng as _, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(ctx: &QuotientCtx, dim: usize, rng: &mut ChaCha8Rng) -> RingMatrix<Gf2Poly> {
        RingMatrix::from_fn(dim, |_, _| ctx.qreduce(&Gf2Poly::from_words(vec![rng.gen()])))
    }

    #[test]
    fn identity_and_small_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut w = WorkCounters::default();
        let ctx = QuotientCtx::new(Gf2Poly::from_exponents([0, 1, 2])).unwrap();
        for dim in [1, 2, 3, 5, 8] {
            let a = random_matrix(&ctx, dim, &mut rng);
            let id = RingMatrix::identity(&ctx, dim);
            assert_eq!(strassen_mul(&ctx, &a, &id, 1, &mut w).unwrap(), a);
            let b = random_matrix(&ctx, dim, &mut rng);
            assert_eq!(strassen_mul(&ctx, &a, &b, 1, &mut w).unwrap(), naive_mul(&ctx, &a, &b, &mut w).unwrap());
        }
        let a = random_matrix(&ctx, 2, &mut rng);
        let b = random_matrix(&ctx, 3, &mut rng);
        assert!(strassen_mul(&ctx, &a, &b, 1, &mut w).is_err());
    }

    #[test]
    fn padded_65_matches_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let ctx = QuotientCtx::new(Gf2Poly::from_words(vec![rng.gen::<u64>() | 1, 1])).unwrap();
        let a = random_matrix(&ctx, 65, &mut rng);
        let b = random_matrix(&ctx, 65, &mut rng);
        let (mut ws, mut wn) = (WorkCounters::default(), WorkCounters::default());
        let fast = strassen_mul(&ctx, &a, &b, 64, &mut ws).unwrap();
        assert_eq!(fast, naive_mul(&ctx, &a, &b, &mut wn).unwrap());
        assert_eq!(ws.ring_muls, 7 * 64 * 64 * 64);
    }

    #[test]
    fn works_over_z4() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let base = QuotientCtx::new(Gf2Poly::from_exponents([0, 3, 7])).unwrap();
        let z4 = Z4Ctx::new(&base);
        let mut entry = |_: usize, _: usize| {
            z4.reduce(&Z4Poly {
                lo: Gf2Poly::from_words(vec![rng.gen::<u8>() as u64]),
                hi: Gf2Poly::from_words(vec![rng.gen::<u8>() as u64]),
            })
        };
        let a = RingMatrix::from_fn(6, &mut entry);
        let b = RingMatrix::from_fn(6, &mut entry);
        let mut w = WorkCounters::default();
        assert_eq!(strassen_mul(&z4, &a, &b, 1, &mut w).unwrap(), naive_mul(&z4, &a, &b, &mut w).unwrap());
    }
}
