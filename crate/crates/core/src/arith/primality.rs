/// Witnesses that make Miller–Rabin exact for every 64-bit input
/// (Sinclair's seven-base set).
const WITNESSES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for all `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 37 * 37 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &w in &WITNESSES {
        let w = w % n;
        if w == 0 {
            continue;
        }
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn trial(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2u64;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn examples() {
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(!is_prime(561));
        assert!(is_prime(1_000_003));
        assert!(is_prime(18_446_744_073_709_551_557)); // largest 64-bit prime
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2, 3, 5, 7
        assert!(!is_prime(3_825_123_056_546_413_051));
    }

    #[test]
    fn agrees_with_trial_division_below_a_million() {
        // sieve instead of per-n trial division keeps this fast
        let limit = 1_000_000usize;
        let mut composite = vec![false; limit + 1];
        for p in 2..=limit {
            if !composite[p] {
                let mut m = p * p;
                while m <= limit {
                    composite[m] = true;
                    m += p;
                }
            }
            assert_eq!(is_prime(p as u64), !composite[p], "n = {p}");
        }
    }

    #[test]
    fn agrees_with_trial_division_on_random_words() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            // products of two ~32-bit numbers keep trial division honest and cheap
            let n: u64 = rng.gen::<u32>() as u64 * rng.gen_range(1..=4u64) + rng.gen_range(0..3);
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
        for _ in 0..200 {
            let p = loop {
                let c = rng.gen_range(1u64 << 20..1 << 22);
                if trial(c) {
                    break c;
                }
            };
            let q = loop {
                let c = rng.gen_range(1u64 << 30..1 << 32);
                if trial(c) {
                    break c;
                }
            };
            assert!(!is_prime(p * q));
            assert!(is_prime(q));
        }
    }
}
