//! Position sampling: bd-anchors, reduced bd-anchors and minimizers.

mod anchors;
mod minimizers;
mod rotation;
mod sample;
pub(crate) mod suffix_array;

pub(crate) use anchors::AnchorScanner;
pub use anchors::{bd_anchors, bd_anchors_chunked, default_r, reduced_bd_anchors, ReductionRule};
pub use minimizers::{minimizers_std, minimizers_win};
pub use rotation::{minimal_rotation, minimal_rotation_restricted};
pub use sample::{density, Order, Sample, Scheme, SchemeParams};

use crate::{Error, Result};

/// Samples `t` with the scheme described by `params`.
pub fn sample(t: &[u8], params: SchemeParams) -> Result<Sample> {
    match params.scheme {
        Scheme::Bda => bd_anchors(t, params.ell),
        Scheme::Rbda => reduced_bd_anchors(t, params.ell, params.r),
        Scheme::MinStd | Scheme::MinWin => {
            let (Some(w), Some(k)) = (params.w, params.k) else {
                return Err(Error::BadMinimizerParams {
                    w: params.w.unwrap_or(0),
                    k: params.k.unwrap_or(0),
                    n: t.len(),
                });
            };
            if params.scheme == Scheme::MinStd {
                minimizers_std(t, w, k, params.order)
            } else {
                minimizers_win(t, w, k, params.order)
            }
        }
    }
}
