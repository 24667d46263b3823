use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

const PRINTABLE_FIRST: u8 = b'!';
const PRINTABLE_COUNT: usize = 94;

/// The `i`-th letter of a generated alphabet of size `sigma`: `a..z` for
/// `σ ≤ 26`, otherwise printable ASCII starting at `!`.
pub fn letter(i: usize, sigma: usize) -> u8 {
    if sigma <= 26 {
        b'a' + i as u8
    } else {
        PRINTABLE_FIRST + i as u8
    }
}

fn check_sigma(sigma: usize) -> Result<()> {
    if sigma == 0 || sigma > PRINTABLE_COUNT {
        return Err(Error::Invalid(format!("alphabet size must be in 1..={PRINTABLE_COUNT}, got {sigma}")));
    }
    Ok(())
}

/// `n` i.i.d. uniform letters over an alphabet of size `sigma`.
pub fn gen_random_string(n: usize, sigma: usize, seed: u64) -> Result<Vec<u8>> {
    check_sigma(sigma)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_letters(&mut rng, n, sigma))
}

fn random_letters(rng: &mut ChaCha8Rng, n: usize, sigma: usize) -> Vec<u8> {
    (0..n).map(|_| letter(rng.gen_range(0..sigma), sigma)).collect()
}

/// Parameters of the clustered top-K benchmark.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(default, deny_unknown_fields))]
pub struct SyntheticConfig {
    pub num_queries: usize,
    pub qlen: usize,
    /// Cluster size, including the query itself.
    pub k: usize,
    /// Edit rate between consecutive queries.
    pub d: f64,
    /// Maximum edit rate between a cluster member and its query.
    pub d_prime: f64,
    pub sigma: usize,
    pub seed: u64,
}

impl Default for SyntheticConfig {
    fn default() -> Self {
        SyntheticConfig { num_queries: 50, qlen: 1000, k: 20, d: 0.15, d_prime: 0.10, sigma: 20, seed: 1 }
    }
}

impl SyntheticConfig {
    /// Edit operations between consecutive queries.
    pub fn e(&self) -> usize {
        libm::round(self.d * self.qlen as f64) as usize
    }

    /// Maximum edit operations between a member and its query.
    pub fn e_prime(&self) -> usize {
        libm::round(self.d_prime * self.qlen as f64) as usize
    }

    fn validate(&self) -> Result<()> {
        check_sigma(self.sigma)?;
        if self.sigma < 2 {
            return Err(Error::AlphabetTooSmall(self.sigma));
        }
        if self.k == 0 {
            return Err(Error::ZeroK);
        }
        if !(0.0 <= self.d_prime && self.d_prime < self.d && self.d <= 1.0) {
            return Err(Error::Invalid(format!("need 0 ≤ d' < d ≤ 1, got d={} d'={}", self.d, self.d_prime)));
        }
        if self.qlen == 0 || self.num_queries == 0 {
            return Err(Error::Invalid("qlen and num_queries must be positive".into()));
        }
        Ok(())
    }
}

/// Generated benchmark: queries, the dictionary (clusters laid out one after
/// another) and, per query, the dictionary ids of its cluster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntheticData {
    pub queries: Vec<Vec<u8>>,
    pub dictionary: Vec<Vec<u8>>,
    pub truth: Vec<Vec<usize>>,
}

/// Applies `ops` random edit operations: position uniform, type uniform over
/// insertion, deletion and substitution, letters uniform, substitutions
/// always change the letter.
fn perturb(rng: &mut ChaCha8Rng, s: &[u8], ops: usize, sigma: usize) -> Vec<u8> {
    let mut out = s.to_vec();
    for _ in 0..ops {
        let kind = if out.is_empty() { 0 } else { rng.gen_range(0..3) };
        match kind {
            0 => {
                let at = rng.gen_range(0..=out.len());
                out.insert(at, letter(rng.gen_range(0..sigma), sigma));
            }
            1 => {
                let at = rng.gen_range(0..out.len());
                out.remove(at);
            }
            _ => {
                let at = rng.gen_range(0..out.len());
                let old = out[at];
                let mut c = letter(rng.gen_range(0..sigma - 1), sigma);
                if c >= old {
                    c += 1;
                }
                debug_assert!(c != old);
                out[at] = c;
            }
        }
    }
    out
}

/// Chained queries with a cluster of `K` strings around each one.
///
/// The first query is uniform random; each next query is `e` random edits
/// away from the previous one. Each cluster holds the query plus `K-1`
/// copies perturbed by a uniformly drawn number of edits in `0..=e'`.
/// Every member is re-checked to be within edit distance `e'` of its query.
pub fn gen_synthetic(cfg: &SyntheticConfig) -> Result<SyntheticData> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (e, e_prime) = (cfg.e(), cfg.e_prime());
    let mut queries = Vec::with_capacity(cfg.num_queries);
    let mut q = random_letters(&mut rng, cfg.qlen, cfg.sigma);
    for i in 0..cfg.num_queries {
        if i > 0 {
            q = perturb(&mut rng, &q, e, cfg.sigma);
        }
        queries.push(q.clone());
    }
    let mut dictionary = Vec::with_capacity(cfg.num_queries * cfg.k);
    let mut truth = Vec::with_capacity(cfg.num_queries);
    for q in &queries {
        let mut cluster = vec![dictionary.len()];
        dictionary.push(q.clone());
        for _ in 1..cfg.k {
            let ops = rng.gen_range(0..=e_prime);
            let member = perturb(&mut rng, q, ops, cfg.sigma);
            if !within_edit_distance(&member, q, e_prime) {
                return Err(Error::Invalid("generated member exceeds e'".into()));
            }
            cluster.push(dictionary.len());
            dictionary.push(member);
        }
        truth.push(cluster);
    }
    Ok(SyntheticData { queries, dictionary, truth })
}

/// Whether `d_E(a, b) ≤ bound`, by a DP restricted to the diagonal band of
/// half-width `bound`.
pub fn within_edit_distance(a: &[u8], b: &[u8], bound: usize) -> bool {
    if a.len().abs_diff(b.len()) > bound {
        return false;
    }
    let inf = usize::MAX / 2;
    let width = 2 * bound + 1;
    // row i stores columns j = i - bound + c for c in 0..width
    let mut prev = vec![inf; width];
    let mut cur = vec![inf; width];
    for (c, cell) in prev.iter_mut().enumerate() {
        let j = c as isize - bound as isize;
        if j >= 0 && j as usize <= b.len() {
            *cell = j as usize;
        }
    }
    for i in 1..=a.len() {
        for c in 0..width {
            let j = i as isize - bound as isize + c as isize;
            cur[c] = inf;
            if j < 0 || j as usize > b.len() {
                continue;
            }
            let j = j as usize;
            if j == 0 {
                cur[c] = i;
                continue;
            }
            // (i-1, j-1) sits at column c in the previous row; (i-1, j) at c+1
            let mut best = prev[c] + usize::from(a[i - 1] != b[j - 1]);
            if c + 1 < width {
                best = best.min(prev[c + 1] + 1);
            }
            if c > 0 {
                best = best.min(cur[c - 1] + 1);
            }
            cur[c] = best;
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    let c = b.len() + bound - a.len();
    prev[c] <= bound
}
