use serde::{Deserialize, Serialize};

/// How the large-`d` part of the `μ(d)` expansion is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum LargeDMode {
    /// Swap the sums for `d > b^λ` and factor each `d` by trial division.
    #[default]
    Paper,
    /// Sieve `μ` all the way to `√b`; no large-`d` branch.
    Sieve,
}

impl std::str::FromStr for LargeDMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(LargeDMode::Paper),
            "sieve" => Ok(LargeDMode::Sieve),
            other => Err(format!("unknown large-d mode `{other}` (expected paper|sieve)")),
        }
    }
}

/// Tunable exponents and thresholds. None of them affect results, only cost.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Config {
    /// `d ≤ b^λ` uses sieved `μ(d)`; larger `d` go through the swapped sum.
    pub large_d_exponent: f64,
    pub large_d_mode: LargeDMode,
    /// Interval-width slack: widths up to `x^(1/2+c)` are in the fast regime.
    pub c: f64,
    /// Below `x^small_n_exponent` the hyperbola partition emits singletons.
    pub small_n_exponent: f64,
    /// Approximation quality `Q = x^approx_exponent` for the partition.
    pub approx_exponent: f64,
    /// Terms `n ≤ block_constant·x^(1/3)` of the floor sum are added directly.
    pub block_constant: u64,
    /// Strassen recursion stops at or below this dimension.
    pub strassen_cutoff: usize,
    /// Quadratic monomial sums with cube side below this are summed termwise.
    pub min_cube_side: u64,
    /// Number of subintervals probed before the binary descent.
    pub initial_splits: u64,
    /// Intervals at most this long are scanned with the primality test.
    pub direct_scan: u64,
    /// Maximum cells a single sieve call may allocate.
    pub sieve_budget: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            large_d_exponent: 0.49,
            large_d_mode: LargeDMode::Paper,
            c: 0.01,
            small_n_exponent: 0.49,
            approx_exponent: 0.1,
            block_constant: 1,
            strassen_cutoff: 64,
            min_cube_side: 2,
            initial_splits: 16,
            direct_scan: 64,
            sieve_budget: 100_000_000,
        }
    }
}

/// `⌊x^e⌋` for a real exponent. The result only picks thresholds, so a float
/// power is fine here.
pub(crate) fn pow_floor(x: u64, e: f64) -> u64 {
    if x == 0 {
        return 0;
    }
    let v = (x as f64).powf(e).floor();
    if v <= 0.0 {
        0
    } else if v >= u64::MAX as f64 {
        u64::MAX
    } else {
        v as u64
    }
}
