//! Bidirectional string anchors (bd-anchors).
//!
//! A bd-anchor of a length-`ℓ` string is the leftmost starting position of its
//! lexicographically minimal rotation. Sampling the bd-anchor of every
//! length-`ℓ` window of a text gives a locally consistent, approximately
//! uniform sample whose expected size shrinks like `n/ℓ`.
//!
//! This crate holds the allocation-only algorithmic core:
//!
//! - [`sampling`]: bd-anchors, reduced bd-anchors, chunked construction and
//!   the two minimizer schemes used as density baselines.
//! - [`index`]: the bidirectional anchor index answering `(α,β)`-hit queries,
//!   pattern searches (range-reporting and one-sided variants) and
//!   multi-fragment queries.
//! - [`similarity`]: top-K search under edit distance over a dictionary
//!   (seed, chain by longest increasing subsequence, close gaps by DP).
//! - [`oracles`]: brute-force references, generators and estimators used to
//!   check everything above.
//!
//! All public text positions are 1-based.
//!
//! ```
//! use bdanchors_core::sampling::bd_anchors;
//!
//! let sample = bd_anchors(b"aabaaabcbda", 5).unwrap();
//! assert_eq!(sample.positions(), &[4, 5, 6, 11]);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod index;
pub mod oracles;
pub mod sampling;
pub mod similarity;
mod text;

pub use error::{Error, Result};
pub use text::Text;
