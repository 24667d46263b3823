use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::rotation::Rotations;
use super::sample::{Sample, SchemeParams};
use crate::{Error, Result};

/// Computes the (reduced) bd-anchor of every length-`ℓ` window.
#[derive(Debug, Default)]
pub(crate) struct AnchorScanner {
    rot: Rotations,
}

impl AnchorScanner {
    /// Calls `emit(window_start, anchor)` (0-based) for each window of `t`
    /// in left-to-right order. Requires `1 ≤ ℓ ≤ |t|` and `r < ℓ`.
    pub(crate) fn scan(&mut self, t: &[u8], ell: usize, r: usize, mut emit: impl FnMut(usize, usize)) {
        debug_assert!(ell >= 1 && ell <= t.len() && r < ell);
        if ell == 1 {
            (0..t.len()).for_each(|i| emit(i, i));
            return;
        }
        for i in 0..=t.len() - ell {
            let window = &t[i..i + ell];
            let off = if r == 0 { self.rot.least(window) } else { self.rot.least_restricted(window, ell - r) };
            emit(i, i + off);
        }
    }

    /// Number of distinct anchors of `t`; `seen` is scratch space.
    pub(crate) fn count(&mut self, t: &[u8], ell: usize, seen: &mut Vec<bool>) -> usize {
        seen.clear();
        seen.resize(t.len(), false);
        let mut count = 0;
        self.scan(t, ell, 0, |_, a| {
            if !seen[a] {
                seen[a] = true;
                count += 1;
            }
        });
        count
    }
}

fn check_window(n: usize, ell: usize) -> Result<()> {
    if ell == 0 {
        return Err(Error::ZeroWindow);
    }
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if ell > n {
        return Err(Error::WindowTooLong { ell, n });
    }
    Ok(())
}

fn sample_windows(t: &[u8], ell: usize, r: usize, params: SchemeParams) -> Sample {
    let mut first = vec![usize::MAX; t.len()];
    AnchorScanner::default().scan(t, ell, r, |i, a| {
        if first[a] == usize::MAX {
            first[a] = i;
        }
    });
    Sample::from_first_windows(&first, params)
}

/// The order-`ℓ` bd-anchors of `t`.
///
/// Runs Booth's algorithm on every window, `O(nℓ)` overall.
pub fn bd_anchors(t: &[u8], ell: usize) -> Result<Sample> {
    check_window(t.len(), ell)?;
    Ok(sample_windows(t, ell, 0, SchemeParams::bda(ell)))
}

/// Order-`ℓ` reduced bd-anchors: per window the minimal rotation is taken
/// over the starts `1..=ℓ-r` only.
pub fn reduced_bd_anchors(t: &[u8], ell: usize, r: usize) -> Result<Sample> {
    check_window(t.len(), ell)?;
    if r >= ell {
        return Err(Error::ReductionTooLarge { r, ell });
    }
    Ok(sample_windows(t, ell, r, SchemeParams::rbda(ell, r)))
}

/// Same set as [`bd_anchors`], computed over consecutive blocks of
/// `⌈n^ε⌉` windows so that working memory stays proportional to the block
/// length plus the output.
pub fn bd_anchors_chunked(t: &[u8], ell: usize, epsilon: f64) -> Result<Sample> {
    check_window(t.len(), ell)?;
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::BadEpsilon);
    }
    let n = t.len();
    let windows = n - ell + 1;
    let block = (libm::ceil(libm::pow(n as f64, epsilon)) as usize).clamp(1, n);

    let mut scanner = AnchorScanner::default();
    let mut out: Vec<(usize, usize)> = Vec::new();
    let mut local_first: Vec<usize> = Vec::new();
    let mut chunk: Vec<(usize, usize)> = Vec::new();
    let mut tail: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    while start < windows {
        let end = (start + block).min(windows);
        let piece = &t[start..end - 1 + ell];
        local_first.clear();
        local_first.resize(piece.len(), usize::MAX);
        scanner.scan(piece, ell, 0, |i, a| {
            if local_first[a] == usize::MAX {
                local_first[a] = i;
            }
        });
        chunk.clear();
        chunk.extend(
            local_first
                .iter()
                .enumerate()
                .filter(|(_, &w)| w != usize::MAX)
                .map(|(a, &w)| (start + a + 1, start + w + 1)),
        );
        // Earlier blocks can only have produced anchors in the first ℓ-1
        // positions of this block; merge that overlap, keeping the earlier window.
        tail.clear();
        while out.last().is_some_and(|&(p, _)| p > start) {
            tail.push(out.pop().unwrap());
        }
        tail.reverse();
        let (mut a, mut b) = (0, 0);
        while a < tail.len() || b < chunk.len() {
            let next = match (tail.get(a), chunk.get(b)) {
                (Some(&x), Some(&y)) if x.0 == y.0 => {
                    a += 1;
                    b += 1;
                    (x.0, x.1.min(y.1))
                }
                (Some(&x), Some(&y)) if x.0 < y.0 => {
                    a += 1;
                    x
                }
                (Some(_), Some(&y)) => {
                    b += 1;
                    y
                }
                (Some(&x), None) => {
                    a += 1;
                    x
                }
                (None, Some(&y)) => {
                    b += 1;
                    y
                }
                (None, None) => unreachable!(),
            };
            out.push(next);
        }
        start = end;
    }
    Ok(Sample::from_sorted(out, SchemeParams::bda(ell), n))
}

/// Which reduction constant to use in [`default_r`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ReductionRule {
    /// `⌈4 log ℓ / log σ⌉`, the value guaranteeing `O(n/ℓ)` expected size.
    Lemma,
    /// `⌈3 log ℓ / log σ⌉`, the smaller value used for density experiments.
    Experiment,
}

/// Default reduction amount for reduced bd-anchors, clamped to `ℓ-1`.
///
/// Evaluated exactly as the least `r` with `σ^r ≥ ℓ^c`, so the result does
/// not depend on floating-point logarithms.
pub fn default_r(ell: usize, sigma: usize, rule: ReductionRule) -> Result<usize> {
    if sigma < 2 {
        return Err(Error::AlphabetTooSmall(sigma));
    }
    if ell < 2 {
        return Err(Error::Invalid(format!("default_r needs ℓ ≥ 2, got {ell}")));
    }
    let c = match rule {
        ReductionRule::Lemma => 4,
        ReductionRule::Experiment => 3,
    };
    let target = (ell as u128).saturating_pow(c);
    let mut r = 0usize;
    let mut power: u128 = 1;
    while power < target {
        power = power.saturating_mul(sigma as u128);
        r += 1;
    }
    Ok(r.min(ell - 1))
}
