use alloc::vec::Vec;

/// Sampling scheme that produced a [`Sample`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Scheme {
    /// bd-anchors.
    Bda,
    /// Reduced bd-anchors.
    Rbda,
    /// Standard minimizers: every tied minimal k-mer of each window.
    MinStd,
    /// Robust winnowing: one minimizer per window.
    MinWin,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Bda => "bda",
            Scheme::Rbda => "rbda",
            Scheme::MinStd => "std",
            Scheme::MinWin => "win",
        }
    }
}

/// Total order on k-mers used by the minimizer schemes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Order {
    #[default]
    Lex,
    /// Seeded rolling hash of the k-mer.
    Hashed(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SchemeParams {
    pub scheme: Scheme,
    /// Window length in letters; `w + k - 1` for minimizers.
    pub ell: usize,
    /// Window count (minimizers only).
    pub w: Option<usize>,
    /// k-mer length (minimizers only).
    pub k: Option<usize>,
    /// Reduction amount; 0 unless the scheme is [`Scheme::Rbda`].
    pub r: usize,
    pub order: Order,
}

impl SchemeParams {
    pub fn bda(ell: usize) -> Self {
        SchemeParams { scheme: Scheme::Bda, ell, w: None, k: None, r: 0, order: Order::Lex }
    }

    pub fn rbda(ell: usize, r: usize) -> Self {
        SchemeParams { scheme: Scheme::Rbda, ell, w: None, k: None, r, order: Order::Lex }
    }

    pub fn minimizers(scheme: Scheme, w: usize, k: usize, order: Order) -> Self {
        SchemeParams { scheme, ell: w + k - 1, w: Some(w), k: Some(k), r: 0, order }
    }
}

/// A sorted set of sampled 1-based text positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    positions: Vec<usize>,
    leftmost_window: Vec<usize>,
    params: SchemeParams,
    n: usize,
}

impl Sample {
    /// `entries` must be sorted by position without duplicates.
    pub(crate) fn from_sorted(entries: Vec<(usize, usize)>, params: SchemeParams, n: usize) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        let (positions, leftmost_window) = entries.into_iter().unzip();
        Sample { positions, leftmost_window, params, n }
    }

    /// Builds a sample from a per-position table of first producing windows
    /// (0-based position index, 0-based window, `usize::MAX` when unsampled).
    pub(crate) fn from_first_windows(first: &[usize], params: SchemeParams) -> Self {
        let entries =
            first.iter().enumerate().filter(|(_, &w)| w != usize::MAX).map(|(p, &w)| (p + 1, w + 1)).collect();
        Sample::from_sorted(entries, params, first.len())
    }

    /// Sampled positions, 1-based and strictly increasing.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// Smallest 1-based window start producing `positions()[idx]`.
    pub fn leftmost_windows(&self) -> &[usize] {
        &self.leftmost_window
    }

    /// Smallest window start producing position `pos`, if sampled.
    pub fn leftmost_window(&self, pos: usize) -> Option<usize> {
        self.positions.binary_search(&pos).ok().map(|i| self.leftmost_window[i])
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.positions.binary_search(&pos).is_ok()
    }

    pub fn params(&self) -> &SchemeParams {
        &self.params
    }

    /// Length of the sampled text.
    pub fn text_len(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn density(&self) -> f64 {
        density(self)
    }
}

/// Sampled positions per text letter.
pub fn density(s: &Sample) -> f64 {
    if s.n == 0 {
        return 0.0;
    }
    s.positions.len() as f64 / s.n as f64
}
