//! Deterministic prime-parity toolkit.
//!
//! The crate decides the parity of the number of primes in an interval through
//! the `2^ω(n)` expansion and a sublinear divisor-sum routine, evaluates the
//! prime polynomial `Σ t^p` in `GF(2)[t]/(g)`, and locates primes by a
//! parity-guided binary search. Every fast path has an exact brute-force twin
//! in [`arith`] or [`polyring::oracle`].

pub mod arith;
pub mod config;
pub mod error;
pub mod hyperbola;
pub mod parity;
pub mod polyring;
pub mod search;
pub mod work;

pub use arith::Interval;
pub use config::{Config, LargeDMode};
pub use error::{Error, Result};
pub use work::WorkCounters;

/// Largest argument accepted by the public entry points.
pub const MAX_ARG: u64 = 1 << 50;
