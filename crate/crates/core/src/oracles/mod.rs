//! Brute-force references, data generators and estimators.
//!
//! Nothing here calls into [`crate::sampling`], [`crate::index`] or
//! [`crate::similarity`] except [`avg_anchor_count`], which measures the
//! production anchor construction rather than checking it.

mod brute;
mod generate;
mod stats;

pub use brute::{
    oracle_bd_anchors, oracle_edit_distance, oracle_hits, oracle_lis_len, oracle_minimal_rotation, oracle_minimizers,
    oracle_occurrences, oracle_reduced_bd_anchors,
};
pub use generate::{gen_random_string, gen_synthetic, letter, within_edit_distance, SyntheticConfig, SyntheticData};
pub use stats::{avg_anchor_count, evaluate_f1, CountMode, TrialStats, EXHAUSTIVE_CAP};
