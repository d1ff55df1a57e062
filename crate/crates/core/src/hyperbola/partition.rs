use super::dirichlet::dirichlet_approx;
use crate::arith::isqrt;
use crate::config::{pow_floor, Config};
use crate::error::{check_bound, invalid, Result};
use serde::{Deserialize, Serialize};

/// An arithmetic progression `n0, n0 + step, …` (`count` terms) on which
/// `⌊x/n⌋ = v0 + i·slope`. In paired mode `diff = ⌊x/n⌋ − ⌊x'/n⌋` is the
/// same for every term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct APPiece {
    pub n0: u64,
    pub step: u64,
    pub count: u64,
    pub v0: u64,
    pub slope: i64,
    pub diff: Option<u64>,
}

impl APPiece {
    fn singleton(x: u64, xp: Option<u64>, n: u64) -> Self {
        APPiece { n0: n, step: 1, count: 1, v0: x / n, slope: 0, diff: xp.map(|xp| x / n - xp / n) }
    }

    pub fn last(&self) -> u64 {
        self.n0 + (self.count - 1) * self.step
    }

    pub fn terms(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.count).map(move |i| self.n0 + i * self.step)
    }

    /// `v0 + i·slope`.
    pub fn value_at(&self, i: u64) -> i128 {
        self.v0 as i128 + i as i128 * self.slope as i128
    }
}

/// Partition `{lo..=hi}` into progressions with `n ↦ ⌊x/n⌋` linear on each.
pub fn hyperbola_partition(x: u64, lo: u64, hi: u64, cfg: &Config) -> Result<Vec<APPiece>> {
    check_bound(x)?;
    if lo > hi {
        return Ok(Vec::new());
    }
    check_range(x, lo, hi)?;
    let cut = pow_floor(x, cfg.small_n_exponent);
    Ok(partition(x, None, lo, hi, cut, cfg))
}

/// As [`hyperbola_partition`], with `⌊x/n⌋ − ⌊x'/n⌋` also constant on each piece.
pub fn hyperbola_partition_pair(x: u64, x_prime: u64, lo: u64, hi: u64, cfg: &Config) -> Result<Vec<APPiece>> {
    check_bound(x)?;
    if x_prime > x {
        return Err(invalid(format!("x' = {x_prime} exceeds x = {x}")));
    }
    if x - x_prime > pow_floor(x, 0.5 + cfg.c) {
        return Err(invalid(format!("x − x' = {} exceeds x^(1/2+c)", x - x_prime)));
    }
    if lo > hi {
        return Ok(Vec::new());
    }
    check_range(x, lo, hi)?;
    let cut = pow_floor(x, 0.5 - cfg.c);
    Ok(partition(x, Some(x_prime), lo, hi, cut, cfg))
}

fn check_range(x: u64, lo: u64, hi: u64) -> Result<()> {
    if lo == 0 || hi > isqrt(x) {
        return Err(invalid(format!("partition range [{lo}, {hi}] must lie in [1, ⌊√x⌋]")));
    }
    Ok(())
}

fn partition(x: u64, xp: Option<u64>, lo: u64, hi: u64, cut: u64, cfg: &Config) -> Vec<APPiece> {
    let mut pieces = Vec::new();
    let mut n0 = lo;
    while n0 <= hi && n0 < cut {
        pieces.push(APPiece::singleton(x, xp, n0));
        n0 += 1;
    }
    let q_bound = pow_floor(x, cfg.approx_exponent).max(1);
    while n0 <= hi {
        let approx = dirichlet_approx(x, n0, q_bound).expect("n0 ≥ 1, Q ≥ 1");
        let q = approx.q;
        let block_end = n0 + q * (q_bound + 1) - 1;
        if block_end > hi {
            // tail overruns the range: singletons
            pieces.extend((n0..=hi).map(|n| APPiece::singleton(x, xp, n)));
            break;
        }
        for r in 0..q {
            split_progression(x, xp, n0 + r, q, q_bound + 1, approx.a, &mut pieces);
        }
        n0 = block_end + 1;
    }
    pieces
}

/// One residue progression `n_l = first + l·step`, `0 ≤ l < count`.
///
/// With `P(l) = x/n_l + a·l` we have `⌊x/n_l⌋ = ⌊P(l)⌋ − a·l`. `P` is convex in
/// `l`, so `h(l) = ⌊P(l)⌋` is non-increasing up to the minimiser of `P` and
/// non-decreasing after it; on each monotone stretch runs of constant `h`
/// are found by binary search.
fn split_progression(x: u64, xp: Option<u64>, first: u64, step: u64, count: u64, a: u64, out: &mut Vec<APPiece>) {
    let n_at = |l: u64| first + l * step;
    let h = |num: u64, l: u64| (num / n_at(l)) as u128 + a as u128 * l as u128;
    // first l with P(l+1) − P(l) ≥ 0, i.e. a·n_l·n_{l+1} ≥ num·step
    let turn = |num: u64| -> u64 {
        let rising = |l: u64| a as u128 * n_at(l) as u128 * n_at(l + 1) as u128 >= num as u128 * step as u128;
        let (mut lo, mut hi) = (0u64, count - 1);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if rising(mid) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        lo
    };
    let mut cuts = vec![turn(x)];
    if let Some(xp) = xp {
        cuts.push(turn(xp));
    }
    cuts.sort_unstable();
    let mut seg_start = 0u64;
    for seg_end in cuts.into_iter().chain(std::iter::once(count - 1)) {
        if seg_end < seg_start {
            continue;
        }
        let mut l = seg_start;
        while l <= seg_end {
            let v = h(x, l);
            let vp = xp.map(|xp| h(xp, l));
            let same = |m: u64| h(x, m) == v && xp.map(|xp| h(xp, m)) == vp;
            // last m in [l, seg_end] with same values; the predicate holds on a prefix
            let mut good = l;
            let mut stride = 1u64;
            while good + stride <= seg_end && same(good + stride) {
                good += stride;
                stride *= 2;
            }
            let mut bad = (good + stride).min(seg_end + 1);
            while bad - good > 1 {
                let mid = good + (bad - good) / 2;
                if same(mid) {
                    good = mid;
                } else {
                    bad = mid;
                }
            }
            let n = n_at(l);
            let piece = if good == l {
                APPiece::singleton(x, xp, n)
            } else {
                APPiece {
                    n0: n,
                    step,
                    count: good - l + 1,
                    v0: x / n,
                    slope: -(a as i64),
                    diff: xp.map(|xp| x / n - xp / n),
                }
            };
            out.push(piece);
            l = good + 1;
        }
        seg_start = seg_end + 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Cover, disjointness and per-term formula checks by direct evaluation.
    fn check(x: u64, xp: Option<u64>, lo: u64, hi: u64, pieces: &[APPiece]) {
        let mut seen = vec![false; (hi - lo + 1) as usize];
        for p in pieces {
            assert!(p.count >= 1 && p.step >= 1);
            for (i, n) in p.terms().enumerate() {
                assert!((lo..=hi).contains(&n), "{n} outside [{lo}, {hi}]");
                let slot = &mut seen[(n - lo) as usize];
                assert!(!*slot, "{n} covered twice");
                *slot = true;
                assert_eq!((x / n) as i128, p.value_at(i as u64), "linearity at n = {n}, piece {p:?}");
                if let Some(xp) = xp {
                    assert_eq!(Some(x / n - xp / n), p.diff, "difference at n = {n}");
                }
            }
        }
        assert!(seen.iter().all(|&s| s), "range not covered");
    }

    #[test]
    fn small_example() {
        let pieces = hyperbola_partition(100, 5, 10, &Config::default()).unwrap();
        check(100, None, 5, 10, &pieces);
        let p = pieces.iter().find(|p| p.terms().any(|n| n == 9)).unwrap();
        assert_eq!((p.n0, p.count, p.v0, p.slope), (9, 2, 11, -1));
    }

    #[test]
    fn singleton_range() {
        let pieces = hyperbola_partition(12345, 7, 7, &Config::default()).unwrap();
        assert_eq!(pieces, vec![APPiece::singleton(12345, None, 7)]);
        assert!(hyperbola_partition(100, 6, 5, &Config::default()).unwrap().is_empty());
        assert!(hyperbola_partition(100, 5, 11, &Config::default()).is_err());
    }

    #[test]
    fn compresses_mid_range() {
        let (x, lo, hi) = (100_000_000, 1_000, 10_000);
        let pieces = hyperbola_partition(x, lo, hi, &Config::default()).unwrap();
        check(x, None, lo, hi, &pieces);
        assert!((pieces.len() as u64) < hi - lo + 1);
    }

    #[test]
    fn pair_examples() {
        let cfg = Config::default();
        let pieces = hyperbola_partition_pair(100, 95, 8, 10, &cfg).unwrap();
        check(100, Some(95), 8, 10, &pieces);
        for n in 8..=10u64 {
            assert_eq!(100 / n - 95 / n, 1);
        }
        let same = hyperbola_partition_pair(10_000_019, 10_000_019, 2000, 3162, &cfg).unwrap();
        check(10_000_019, Some(10_000_019), 2000, 3162, &same);
        assert!(same.iter().all(|p| p.diff == Some(0)));

        let (x, xp) = (100_000_000, 100_000_000 - 10_000);
        let lo = 3981; // 10^3.6
        let pieces = hyperbola_partition_pair(x, xp, lo, 10_000, &cfg).unwrap();
        check(x, Some(xp), lo, 10_000, &pieces);
        assert!((pieces.len() as u64) < 10_000 - lo + 1);
    }

    #[test]
    fn pair_rejects_wide_gap() {
        let err = hyperbola_partition_pair(100_000_000, 100_000_000 - 20_000, 5000, 10_000, &Config::default());
        assert!(err.is_err());
        assert!(hyperbola_partition_pair(100, 101, 5, 10, &Config::default()).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn random_partitions_are_valid(x in 1u64..=10_000_000_000, lo_frac in 0.0f64..1.0, width in 0u64..20_000) {
            let s = isqrt(x);
            let lo = ((s as f64 * lo_frac) as u64).clamp(1, s);
            let hi = (lo + width).min(s);
            let pieces = hyperbola_partition(x, lo, hi, &Config::default()).unwrap();
            check(x, None, lo, hi, &pieces);
        }

        #[test]
        fn random_pair_partitions_are_valid(x in 1000u64..=10_000_000_000, gap_frac in 0.0f64..=1.0, lo_frac in 0.0f64..1.0, width in 0u64..20_000) {
            let cfg = Config::default();
            let gap = (pow_floor(x, 0.5 + cfg.c) as f64 * gap_frac) as u64;
            let xp = x - gap;
            let s = isqrt(x);
            let lo = ((s as f64 * lo_frac) as u64).clamp(1, s);
            let hi = (lo + width).min(s);
            let pieces = hyperbola_partition_pair(x, xp, lo, hi, &cfg).unwrap();
            check(x, Some(xp), lo, hi, &pieces);
        }
    }
}
