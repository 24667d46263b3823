use alloc::string::String;

/// Errors reported by the algorithmic core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("window longer than text (ℓ={ell}, n={n})")]
    WindowTooLong { ell: usize, n: usize },
    #[error("window length must be at least 1")]
    ZeroWindow,
    #[error("reduction too large (r={r}, ℓ={ell})")]
    ReductionTooLarge { r: usize, ell: usize },
    #[error("alphabet size must be at least 2 (σ={0})")]
    AlphabetTooSmall(usize),
    #[error("chunk exponent must lie in (0, 1]")]
    BadEpsilon,
    #[error("minimizer parameters must satisfy w ≥ 1, k ≥ 1 and w+k-1 ≤ n (w={w}, k={k}, n={n})")]
    BadMinimizerParams { w: usize, k: usize, n: usize },
    #[error("extent too small (α+β={sum} < ℓ+1={need})")]
    ExtentTooSmall { sum: usize, need: usize },
    #[error("extent out of query bounds")]
    ExtentOutOfBounds,
    #[error("pattern shorter than ℓ (|Q|={len}, ℓ={ell})")]
    PatternTooShort { len: usize, ell: usize },
    #[error("fragment extents must satisfy α_i+β_i=ℓ+1 with α strictly decreasing")]
    NonMonotoneExtents,
    #[error("record {id} shorter than ℓ (|S|={len}, ℓ={ell})")]
    RecordTooShort { id: usize, len: usize, ell: usize },
    #[error("empty dictionary")]
    EmptyDictionary,
    #[error("stale chain: seed at (q={q}, s={s}) does not match")]
    StaleChain { q: usize, s: usize },
    #[error("K must be at least 1")]
    ZeroK,
    #[error("exhaustive enumeration of σ^n strings exceeds the 2^24 cap")]
    ExhaustiveTooLarge,
    #[error("invalid parameter: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
