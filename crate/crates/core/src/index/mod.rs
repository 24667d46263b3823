//! Bidirectional anchor index.
//!
//! Anchors are kept in two sorted orders: by the reversed prefix ending at
//! the anchor (the left order) and by the suffix starting at it (the right
//! order). A query fragment anchored at a bd-anchor of the query is located
//! by one binary search in each order, and the two rank intervals are
//! intersected through a 2D range reporting structure over the points
//! `(x, y)` where the left order and the right order hold the same anchor.
//!
//! A text may be split into segments. Left and right strings stop at segment
//! boundaries as if a terminal letter smaller than every byte followed them,
//! so nothing ever matches across two segments.

mod query;
mod wavelet;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::sampling::suffix_array::suffix_array;
use crate::sampling::{bd_anchors, minimal_rotation_restricted, reduced_bd_anchors};
use crate::{Error, Result};
use wavelet::WaveletMatrix;

pub use query::{Hit, HitQuery};

/// Query strategy of a [`TextIndex`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Mode {
    /// Intersect both intervals with the range reporting structure.
    #[default]
    Range,
    /// Search one side only and verify the other by letter comparisons.
    OneSided,
}

/// A 1-based inclusive range of ranks in one of the sorted orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RankInterval {
    pub lo: usize,
    pub hi: usize,
}

impl RankInterval {
    /// Number of ranks covered (never zero).
    pub fn count(&self) -> usize {
        self.hi + 1 - self.lo
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// The index `I_ℓ(T)` over the order-`ℓ` bd-anchors of a text.
#[derive(Debug, Clone)]
pub struct TextIndex {
    text: Vec<u8>,
    ell: usize,
    r: usize,
    mode: Mode,
    // 0-based anchor positions, ascending
    anchors: Vec<usize>,
    // segment starts plus a final entry equal to the text length
    seg_starts: Vec<usize>,
    seg_of: Vec<u32>,
    left_order: Vec<usize>,
    right_order: Vec<usize>,
    // y of the point at x, and back
    y_of_x: Vec<usize>,
    x_of_y: Vec<usize>,
    range: Option<WaveletMatrix>,
    present: [bool; 256],
}

impl TextIndex {
    /// Indexes the order-`ℓ` bd-anchors of `text`.
    ///
    /// ```
    /// use bdanchors_core::index::{Mode, TextIndex};
    ///
    /// let ix = TextIndex::build(b"aabaaabcbda", 5, Mode::Range).unwrap();
    /// assert_eq!(ix.pattern_search(b"abaaa").unwrap(), [2]);
    /// ```
    pub fn build(text: &[u8], ell: usize, mode: Mode) -> Result<Self> {
        let anchors = bd_anchors(text, ell)?;
        let anchors = anchors.positions().iter().map(|p| p - 1).collect();
        Ok(Self::assemble(text.to_vec(), ell, 0, mode, anchors, vec![0]))
    }

    /// Indexes the reduced bd-anchors of `text` with reduction `r`.
    pub fn build_reduced(text: &[u8], ell: usize, r: usize, mode: Mode) -> Result<Self> {
        let anchors = reduced_bd_anchors(text, ell, r)?;
        let anchors = anchors.positions().iter().map(|p| p - 1).collect();
        Ok(Self::assemble(text.to_vec(), ell, r, mode, anchors, vec![0]))
    }

    /// Indexes a concatenation of segments whose anchors were computed per
    /// segment. `seg_starts` and `anchors` are 0-based and ascending, with
    /// `seg_starts[0] = 0`.
    pub(crate) fn build_segmented(
        text: Vec<u8>,
        seg_starts: Vec<usize>,
        anchors: Vec<usize>,
        ell: usize,
        mode: Mode,
    ) -> Self {
        Self::assemble(text, ell, 0, mode, anchors, seg_starts)
    }

    /// Rebuilds an index from its stored parts: the text, `ℓ`, the 1-based
    /// anchor positions and both orders given as 0-based indices into the
    /// anchor list.
    pub fn from_parts(
        text: Vec<u8>,
        ell: usize,
        anchors: &[usize],
        left_order: Vec<usize>,
        right_order: Vec<usize>,
        mode: Mode,
    ) -> Result<Self> {
        let n = text.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        if ell == 0 {
            return Err(Error::ZeroWindow);
        }
        if ell > n {
            return Err(Error::WindowTooLong { ell, n });
        }
        let m = anchors.len();
        if m == 0 || anchors.windows(2).any(|w| w[0] >= w[1]) || anchors[0] == 0 || anchors[m - 1] > n {
            return Err(Error::Invalid("anchor list is not an ascending list of text positions".into()));
        }
        for order in [&left_order, &right_order] {
            let mut seen = vec![false; m];
            if order.len() != m || !order.iter().all(|&i| i < m && !core::mem::replace(&mut seen[i], true)) {
                return Err(Error::Invalid("order is not a permutation of the anchors".into()));
            }
        }
        let anchors = anchors.iter().map(|p| p - 1).collect();
        let mut ix = Self::bare(text, ell, 0, mode, anchors, vec![0]);
        ix.left_order = left_order;
        ix.right_order = right_order;
        ix.link();
        Ok(ix)
    }

    fn bare(text: Vec<u8>, ell: usize, r: usize, mode: Mode, anchors: Vec<usize>, mut seg_starts: Vec<usize>) -> Self {
        let n = text.len();
        seg_starts.push(n);
        let mut seg_of = Vec::with_capacity(anchors.len());
        let mut s = 0;
        for &a in &anchors {
            while seg_starts[s + 1] <= a {
                s += 1;
            }
            seg_of.push(s as u32);
        }
        let mut present = [false; 256];
        text.iter().for_each(|&c| present[c as usize] = true);
        TextIndex {
            text,
            ell,
            r,
            mode,
            anchors,
            seg_starts,
            seg_of,
            left_order: Vec::new(),
            right_order: Vec::new(),
            y_of_x: Vec::new(),
            x_of_y: Vec::new(),
            range: None,
            present,
        }
    }

    fn assemble(text: Vec<u8>, ell: usize, r: usize, mode: Mode, anchors: Vec<usize>, seg_starts: Vec<usize>) -> Self {
        let mut ix = Self::bare(text, ell, r, mode, anchors, seg_starts);
        ix.left_order = ix.sorted_order(Side::Left);
        ix.right_order = ix.sorted_order(Side::Right);
        ix.link();
        ix
    }

    /// Sorts the anchors by their left or right strings using one suffix
    /// array over the whole text. Every segment is followed by its own
    /// terminal symbol, smaller than all letters and increasing with the
    /// segment number, so equal strings end up ordered by position.
    fn sorted_order(&self, side: Side) -> Vec<usize> {
        let n = self.text.len();
        let segs = self.seg_starts.len() - 1;
        let mut seq: Vec<u32> = Vec::with_capacity(n + segs);
        // position in `seq` of each text position
        let mut at = vec![0usize; n];
        for s in 0..segs {
            let (b, e) = (self.seg_starts[s], self.seg_starts[s + 1]);
            match side {
                Side::Right => (b..e).for_each(|i| {
                    at[i] = seq.len();
                    seq.push(segs as u32 + self.text[i] as u32);
                }),
                Side::Left => (b..e).rev().for_each(|i| {
                    at[i] = seq.len();
                    seq.push(segs as u32 + self.text[i] as u32);
                }),
            }
            seq.push(s as u32);
        }
        let mut anchor_at = vec![usize::MAX; seq.len()];
        for (k, &a) in self.anchors.iter().enumerate() {
            anchor_at[at[a]] = k;
        }
        suffix_array(&seq).into_iter().map(|i| anchor_at[i]).filter(|&k| k != usize::MAX).collect()
    }

    fn link(&mut self) {
        let m = self.anchors.len();
        let mut y_of_anchor = vec![0usize; m];
        for (y, &k) in self.right_order.iter().enumerate() {
            y_of_anchor[k] = y;
        }
        self.y_of_x = self.left_order.iter().map(|&k| y_of_anchor[k]).collect();
        self.x_of_y = vec![0usize; m];
        for (x, &y) in self.y_of_x.iter().enumerate() {
            self.x_of_y[y] = x;
        }
        self.range = match self.mode {
            Mode::Range => Some(WaveletMatrix::new(&self.y_of_x)),
            Mode::OneSided => None,
        };
    }

    pub fn text(&self) -> &[u8] {
        &self.text
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Reduction parameter the anchors were computed with (0 for plain
    /// bd-anchors).
    pub fn reduction(&self) -> usize {
        self.r
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Number of indexed anchors.
    pub fn len(&self) -> usize {
        self.anchors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.anchors.is_empty()
    }

    /// Indexed anchor positions, 1-based and ascending.
    pub fn anchors(&self) -> Vec<usize> {
        self.anchors.iter().map(|a| a + 1).collect()
    }

    /// Anchor positions (1-based) in left order.
    pub fn left_anchors(&self) -> Vec<usize> {
        self.left_order.iter().map(|&k| self.anchors[k] + 1).collect()
    }

    /// Anchor positions (1-based) in right order.
    pub fn right_anchors(&self) -> Vec<usize> {
        self.right_order.iter().map(|&k| self.anchors[k] + 1).collect()
    }

    /// Left order as 0-based indices into [`anchors`](Self::anchors).
    pub fn left_permutation(&self) -> &[usize] {
        &self.left_order
    }

    /// Right order as 0-based indices into [`anchors`](Self::anchors).
    pub fn right_permutation(&self) -> &[usize] {
        &self.right_order
    }

    /// The reversed prefix ending at 1-based position `j`, within its segment.
    pub fn left_string(&self, j: usize) -> Vec<u8> {
        let (b, _) = self.segment_bounds(j - 1);
        self.text[b..j].iter().rev().copied().collect()
    }

    /// The suffix starting at 1-based position `j`, within its segment.
    pub fn right_string(&self, j: usize) -> Vec<u8> {
        let (_, e) = self.segment_bounds(j - 1);
        self.text[j - 1..e].to_vec()
    }

    /// `[start, end)` of the segment holding 0-based position `p`.
    pub(crate) fn segment_bounds(&self, p: usize) -> (usize, usize) {
        let s = self.seg_starts.partition_point(|&b| b <= p) - 1;
        (self.seg_starts[s], self.seg_starts[s + 1])
    }

    pub(crate) fn has_letters(&self, p: &[u8]) -> bool {
        p.iter().all(|&c| self.present[c as usize])
    }

    /// Compares the string of the anchor at index `k` with `p`, looking
    /// only at the first `|p|` letters and skipping `skip` letters known to
    /// be equal.
    fn compare(&self, side: Side, k: usize, p: &[u8], skip: usize) -> Ordering {
        let a = self.anchors[k];
        let s = self.seg_of[k] as usize;
        let rest = &p[skip..];
        match side {
            Side::Right => {
                let end = self.seg_starts[s + 1];
                let avail = &self.text[(a + skip).min(end)..end];
                prefix_cmp(avail.iter().copied(), rest)
            }
            Side::Left => {
                let begin = self.seg_starts[s];
                let avail = if a + 1 >= begin + skip { &self.text[begin..a + 1 - skip] } else { &[][..] };
                prefix_cmp(avail.iter().rev().copied(), rest)
            }
        }
    }

    /// Narrows the 0-based half-open rank range `[lo, hi)` of `side` to the
    /// entries whose string starts with `p`, given that they all start with
    /// `p[..skip]`.
    fn narrow(&self, side: Side, lo: usize, hi: usize, p: &[u8], skip: usize) -> (usize, usize) {
        let order = match side {
            Side::Left => &self.left_order,
            Side::Right => &self.right_order,
        };
        let slice = &order[lo..hi];
        let b = slice.partition_point(|&k| self.compare(side, k, p, skip) == Ordering::Less);
        let e = b + slice[b..].partition_point(|&k| self.compare(side, k, p, skip) == Ordering::Equal);
        (lo + b, lo + e)
    }

    fn locate(&self, side: Side, p: &[u8]) -> Option<RankInterval> {
        if !self.has_letters(p) {
            return None;
        }
        let (b, e) = self.narrow(side, 0, self.anchors.len(), p, 0);
        (b < e).then(|| RankInterval { lo: b + 1, hi: e })
    }

    /// Ranks in left order whose reversed prefix starts with `p` (which the
    /// caller has already reversed).
    pub fn locate_left_interval(&self, p: &[u8]) -> Option<RankInterval> {
        self.locate(Side::Left, p)
    }

    /// Ranks in right order whose suffix starts with `p`.
    pub fn locate_right_interval(&self, p: &[u8]) -> Option<RankInterval> {
        self.locate(Side::Right, p)
    }

    /// All points `(x, y)` with `x ∈ xr` and `y ∈ yr`, 1-based, by
    /// increasing `y`.
    pub fn range_report(&self, xr: Option<RankInterval>, yr: Option<RankInterval>) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        if let (Some(xr), Some(yr)) = (xr, yr) {
            self.report(xr, yr, &mut |x, y| out.push((x + 1, y + 1)));
        }
        out
    }

    /// Reports 0-based points inside a rectangle.
    fn report(&self, xr: RankInterval, yr: RankInterval, f: &mut impl FnMut(usize, usize)) {
        let m = self.anchors.len();
        let (x1, x2) = (xr.lo - 1, xr.hi.min(m) - 1);
        let (y1, y2) = (yr.lo - 1, yr.hi.min(m) - 1);
        if x1 > x2 || y1 > y2 {
            return;
        }
        match &self.range {
            Some(wm) => wm.report(x1, x2, y1, y2, &mut |y| f(self.x_of_y[y], y)),
            None => {
                // scan the shorter side and check the other coordinate
                if x2 - x1 <= y2 - y1 {
                    let mut pts: Vec<_> =
                        (x1..=x2).map(|x| (x, self.y_of_x[x])).filter(|&(_, y)| y1 <= y && y <= y2).collect();
                    pts.sort_unstable_by_key(|&(_, y)| y);
                    pts.into_iter().for_each(|(x, y)| f(x, y));
                } else {
                    (y1..=y2)
                        .map(|y| (self.x_of_y[y], y))
                        .filter(|&(x, _)| x1 <= x && x <= x2)
                        .for_each(|(x, y)| f(x, y));
                }
            }
        }
    }

    /// 0-based anchor position at left rank `x` (0-based).
    fn anchor_at_x(&self, x: usize) -> usize {
        self.anchors[self.left_order[x]]
    }

    /// Anchor offset (1-based) of the query fragment `q[..ℓ]`, using the
    /// same reduction the index was built with.
    fn fragment_anchor(&self, q: &[u8]) -> usize {
        minimal_rotation_restricted(&q[..self.ell], self.r).expect("fragment checked by caller")
    }
}

fn prefix_cmp(mut s: impl Iterator<Item = u8>, p: &[u8]) -> Ordering {
    for &c in p {
        match s.next() {
            None => return Ordering::Less,
            Some(x) if x != c => return x.cmp(&c),
            Some(_) => {}
        }
    }
    Ordering::Equal
}
