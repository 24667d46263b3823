use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::generate::letter;
use crate::sampling::AnchorScanner;
use crate::{Error, Result};

/// Largest `σ^n` accepted by exhaustive enumeration.
pub const EXHAUSTIVE_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum CountMode {
    /// Every string of length `n` over the alphabet.
    Exhaustive,
    /// Uniform i.i.d. random strings.
    MonteCarlo,
}

impl CountMode {
    pub fn name(self) -> &'static str {
        match self {
            CountMode::Exhaustive => "exhaustive",
            CountMode::MonteCarlo => "monte-carlo",
        }
    }
}

/// Average number of bd-anchors over a set of strings.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TrialStats {
    pub n: usize,
    pub ell: usize,
    pub sigma: usize,
    pub mode: CountMode,
    /// Number of strings measured (`σ^n` when exhaustive).
    pub trials: u64,
    pub avg_count: f64,
    /// Standard error of the mean; zero for exhaustive runs.
    pub stderr: f64,
    /// Sum of all anchor counts, so exhaustive averages stay exact.
    pub total: u64,
}

/// Mean size of the order-`ℓ` bd-anchor set of length-`n` strings.
///
/// `Exhaustive` walks all `σ^n` strings (`trials` is ignored) and fails when
/// that exceeds [`EXHAUSTIVE_CAP`]. `MonteCarlo` draws `trials` strings from
/// a ChaCha stream seeded with `seed`.
pub fn avg_anchor_count(
    n: usize,
    ell: usize,
    sigma: usize,
    mode: CountMode,
    trials: u64,
    seed: u64,
) -> Result<TrialStats> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if ell == 0 {
        return Err(Error::ZeroWindow);
    }
    if ell > n {
        return Err(Error::WindowTooLong { ell, n });
    }
    if sigma == 0 || sigma > 94 {
        return Err(Error::Invalid(format!("alphabet size must be in 1..=94, got {sigma}")));
    }
    let mut scanner = AnchorScanner::default();
    let mut seen = Vec::with_capacity(n);
    let mut s = vec![letter(0, sigma); n];
    match mode {
        CountMode::Exhaustive => {
            let total_strings = (sigma as u64)
                .checked_pow(n as u32)
                .filter(|&c| c <= EXHAUSTIVE_CAP)
                .ok_or(Error::ExhaustiveTooLarge)?;
            let mut digits = vec![0usize; n];
            let mut total = 0u64;
            loop {
                total += scanner.count(&s, ell, &mut seen) as u64;
                // odometer increment, least significant digit last
                let mut i = n;
                loop {
                    if i == 0 {
                        let avg = total as f64 / total_strings as f64;
                        return Ok(TrialStats {
                            n,
                            ell,
                            sigma,
                            mode,
                            trials: total_strings,
                            avg_count: avg,
                            stderr: 0.0,
                            total,
                        });
                    }
                    i -= 1;
                    digits[i] += 1;
                    if digits[i] < sigma {
                        s[i] = letter(digits[i], sigma);
                        break;
                    }
                    digits[i] = 0;
                    s[i] = letter(0, sigma);
                }
            }
        }
        CountMode::MonteCarlo => {
            if trials == 0 {
                return Err(Error::Invalid("at least one trial is required".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (mut total, mut sum_sq) = (0u64, 0u128);
            for _ in 0..trials {
                s.iter_mut().for_each(|c| *c = letter(rng.gen_range(0..sigma), sigma));
                let c = scanner.count(&s, ell, &mut seen) as u64;
                total += c;
                sum_sq += (c as u128) * (c as u128);
            }
            let t = trials as f64;
            let mean = total as f64 / t;
            let var = if trials > 1 { ((sum_sq as f64) - t * mean * mean) / (t - 1.0) } else { 0.0 };
            Ok(TrialStats { n, ell, sigma, mode, trials, avg_count: mean, stderr: libm::sqrt(var.max(0.0) / t), total })
        }
    }
}

/// F1 score of `returned` against the ground-truth ids `truth`, where `k`
/// results were requested. With `|returned| = k = |truth|` this is the
/// fraction of returned ids that are correct.
pub fn evaluate_f1(returned: &[usize], truth: &[usize], k: usize) -> f64 {
    debug_assert!(returned.len() <= k);
    let mut uniq = returned.to_vec();
    uniq.sort_unstable();
    uniq.dedup();
    let hits = uniq.iter().filter(|id| truth.contains(id)).count();
    if hits == 0 {
        return 0.0;
    }
    let precision = hits as f64 / returned.len() as f64;
    let recall = hits as f64 / truth.len() as f64;
    2.0 * precision * recall / (precision + recall)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::oracle_bd_anchors;

    #[test]
    fn exhaustive_small_matches_brute_force() {
        for (n, ell, sigma) in [(6, 3, 2), (5, 2, 3), (7, 7, 2), (4, 1, 2)] {
            let stats = avg_anchor_count(n, ell, sigma, CountMode::Exhaustive, 0, 0).unwrap();
            let mut total = 0u64;
            let count = (sigma as u64).pow(n as u32);
            for code in 0..count {
                let mut c = code;
                let s: Vec<u8> = (0..n)
                    .map(|_| {
                        let d = (c % sigma as u64) as usize;
                        c /= sigma as u64;
                        letter(d, sigma)
                    })
                    .collect();
                total += oracle_bd_anchors(&s, ell).len() as u64;
            }
            assert_eq!(stats.total, total, "n={n} ell={ell} sigma={sigma}");
            assert_eq!(stats.trials, count);
        }
    }

    #[test]
    fn exhaustive_cap() {
        assert_eq!(avg_anchor_count(32, 8, 2, CountMode::Exhaustive, 0, 0), Err(Error::ExhaustiveTooLarge));
        assert_eq!(avg_anchor_count(13, 4, 4, CountMode::Exhaustive, 0, 0), Err(Error::ExhaustiveTooLarge));
    }

    #[test]
    fn monte_carlo_is_seeded() {
        let a = avg_anchor_count(16, 4, 2, CountMode::MonteCarlo, 2000, 9).unwrap();
        let b = avg_anchor_count(16, 4, 2, CountMode::MonteCarlo, 2000, 9).unwrap();
        assert_eq!(a, b);
        assert!(a.stderr > 0.0);
        assert!(a.avg_count >= 1.0 && a.avg_count <= 16.0);
    }

    #[test]
    fn monte_carlo_tracks_exhaustive() {
        let exact = avg_anchor_count(12, 4, 2, CountMode::Exhaustive, 0, 0).unwrap();
        let mc = avg_anchor_count(12, 4, 2, CountMode::MonteCarlo, 20_000, 3).unwrap();
        assert!((exact.avg_count - mc.avg_count).abs() < 5.0 * mc.stderr);
    }

    #[test]
    fn f1_examples() {
        assert_eq!(evaluate_f1(&[1, 2, 3, 4], &[1, 2, 3, 4], 4), 1.0);
        assert_eq!(evaluate_f1(&[5, 6], &[1, 2], 2), 0.0);
        assert_eq!(evaluate_f1(&[1, 2, 3, 9], &[1, 2, 3, 4], 4), 0.75);
    }
}
