//! `GF(2)[t]` quotient-ring arithmetic and the prime polynomial.

mod gf2;
mod hex;
mod matrix;
pub mod oracle;
mod prime_poly;
mod quad;
mod ring;
mod tau;

pub use gf2::Gf2Poly;
pub use hex::{from_hex, parse_modulus, to_hex};
pub use matrix::{naive_mul, strassen_mul, RingMatrix};
pub use prime_poly::{prime_poly_mod, residue_class_parity};
pub use quad::{quad_exp_sum, quad_split, BiQuad, QuadSplit};
pub use ring::{geo_sum, pow, pow_t, QuotientCtx, Ring, Z4Ctx, Z4Poly};
pub use tau::{tau_weighted_poly, tau_weighted_poly_z4};
