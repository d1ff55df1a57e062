//! Floor sums along the hyperbola `n ↦ ⌊x/n⌋` and the divisor summatory
//! function.

mod dirichlet;
mod floor_sum;
mod partition;

pub use dirichlet::{dirichlet_approx, DirichletApprox};
pub use floor_sum::{
    divisor_summatory, divisor_summatory_with, floor_sum, floor_sum_block, floor_sum_block_with, floor_sum_linear,
    floor_sum_with,
};
pub use partition::{hyperbola_partition, hyperbola_partition_pair, APPiece};
