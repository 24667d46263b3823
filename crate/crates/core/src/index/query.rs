use alloc::vec::Vec;

use super::{RankInterval, Side, TextIndex};
use crate::{Error, Result};

/// An anchored query fragment: `α` letters ending at `j_q` and `β` letters
/// starting at it (1-based, both counting `j_q`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HitQuery {
    pub j_q: usize,
    pub alpha: usize,
    pub beta: usize,
}

/// A query anchor paired with a text anchor whose surroundings match.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hit {
    pub j_q: usize,
    pub j_t: usize,
}

impl TextIndex {
    fn check_extent(&self, q: &[u8], hq: HitQuery) -> Result<()> {
        let need = self.ell + 1;
        if hq.alpha == 0 || hq.beta == 0 || hq.alpha + hq.beta < need {
            return Err(Error::ExtentTooSmall { sum: hq.alpha + hq.beta, need });
        }
        if hq.j_q < hq.alpha || hq.j_q - 1 + hq.beta > q.len() {
            return Err(Error::ExtentOutOfBounds);
        }
        Ok(())
    }

    fn hits_in(&self, j_q: usize, x: Option<(usize, usize)>, y: Option<(usize, usize)>) -> Vec<Hit> {
        let mut hits = Vec::new();
        if let (Some((x1, x2)), Some((y1, y2))) = (x, y) {
            if x1 < x2 && y1 < y2 {
                let xr = RankInterval { lo: x1 + 1, hi: x2 };
                let yr = RankInterval { lo: y1 + 1, hi: y2 };
                self.report(xr, yr, &mut |x, _| hits.push(Hit { j_q, j_t: self.anchor_at_x(x) + 1 }));
            }
        }
        hits.sort_unstable();
        hits
    }

    /// All `(α,β)`-hits of the query fragment around `j_q`, by increasing
    /// text position.
    ///
    /// ```
    /// use bdanchors_core::index::{Hit, HitQuery, Mode, TextIndex};
    ///
    /// let ix = TextIndex::build(b"aabaaabcbda", 5, Mode::Range).unwrap();
    /// let hits = ix.hit_query(b"aacabaaaae", HitQuery { j_q: 6, alpha: 3, beta: 3 }).unwrap();
    /// assert_eq!(hits, [Hit { j_q: 6, j_t: 4 }]);
    /// ```
    pub fn hit_query(&self, q: &[u8], hq: HitQuery) -> Result<Vec<Hit>> {
        self.check_extent(q, hq)?;
        let frag = &q[hq.j_q - hq.alpha..hq.j_q - 1 + hq.beta];
        if !self.has_letters(frag) {
            return Ok(Vec::new());
        }
        let left: Vec<u8> = q[hq.j_q - hq.alpha..hq.j_q].iter().rev().copied().collect();
        let right = &q[hq.j_q - 1..hq.j_q - 1 + hq.beta];
        let m = self.len();
        let x = Some(self.narrow(Side::Left, 0, m, &left, 0));
        let y = Some(self.narrow(Side::Right, 0, m, right, 0));
        Ok(self.hits_in(hq.j_q, x, y))
    }

    fn check_pattern(&self, q: &[u8]) -> Result<()> {
        if q.len() < self.ell {
            return Err(Error::PatternTooShort { len: q.len(), ell: self.ell });
        }
        Ok(())
    }

    /// Occurrences of `q` (1-based starts, ascending), using the strategy
    /// the index was built for.
    pub fn search(&self, q: &[u8]) -> Result<Vec<usize>> {
        match self.mode {
            super::Mode::Range => self.pattern_search(q),
            super::Mode::OneSided => self.pattern_search_onesided(q),
        }
    }

    /// Occurrences of `q` found as `(α,β)`-hits of its first length-`ℓ`
    /// fragment with `α = j` and `β = |q|-j+1`, where `j` is that
    /// fragment's anchor.
    pub fn pattern_search(&self, q: &[u8]) -> Result<Vec<usize>> {
        self.check_pattern(q)?;
        let j = self.fragment_anchor(q);
        let hits = self.hit_query(q, HitQuery { j_q: j, alpha: j, beta: q.len() - j + 1 })?;
        Ok(hits.into_iter().map(|h| h.j_t + 1 - j).collect())
    }

    /// Same result as [`pattern_search`](Self::pattern_search), searching
    /// only the longer side of the anchor and checking the shorter side
    /// against the text letter by letter.
    pub fn pattern_search_onesided(&self, q: &[u8]) -> Result<Vec<usize>> {
        self.check_pattern(q)?;
        if !self.has_letters(q) {
            return Ok(Vec::new());
        }
        let j = self.fragment_anchor(q);
        let (head, tail) = (&q[..j - 1], &q[j - 1..]);
        let mut out = Vec::new();
        if tail.len() >= j {
            let (b, e) = self.narrow(Side::Right, 0, self.len(), tail, 0);
            for &k in &self.right_order[b..e] {
                let a = self.anchors[k];
                let (seg_start, _) = self.segment_bounds(a);
                if a >= seg_start + head.len() && &self.text[a - head.len()..a] == head {
                    out.push(a - head.len() + 1);
                }
            }
        } else {
            let left: Vec<u8> = q[..j].iter().rev().copied().collect();
            let (b, e) = self.narrow(Side::Left, 0, self.len(), &left, 0);
            for &k in &self.left_order[b..e] {
                let a = self.anchors[k];
                let (_, seg_end) = self.segment_bounds(a);
                if a + tail.len() <= seg_end && &self.text[a..a + tail.len()] == tail {
                    out.push(a + 2 - j);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Hits of several fragments sharing the query anchor `j_q`, one list
    /// per `(α_i, β_i)`. Extents must satisfy `α_i + β_i = ℓ + 1` with `α_i`
    /// strictly decreasing, so each fragment's left string is a prefix of
    /// the previous one's and its right string extends the previous one's.
    /// Interval searches reuse the previous interval and skip the letters
    /// already matched.
    pub fn multi_fragment_query(&self, q: &[u8], j_q: usize, extents: &[(usize, usize)]) -> Result<Vec<Vec<Hit>>> {
        for &(alpha, beta) in extents {
            let hq = HitQuery { j_q, alpha, beta };
            self.check_extent(q, hq)?;
            if alpha + beta != self.ell + 1 {
                return Err(Error::Invalid("fragment extents must satisfy α+β = ℓ+1".into()));
            }
        }
        if extents.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(Error::NonMonotoneExtents);
        }
        let d = extents.len();
        if d == 0 {
            return Ok(Vec::new());
        }
        let m = self.len();
        let left: Vec<u8> = q[j_q - extents[0].0..j_q].iter().rev().copied().collect();
        let right = &q[j_q - 1..j_q - 1 + extents[d - 1].1];

        let mut xs = alloc::vec![None; d];
        let (mut b, mut e, mut skip) = (0, m, 0);
        for i in (0..d).rev() {
            let alpha = extents[i].0;
            (b, e) = self.narrow(Side::Left, b, e, &left[..alpha], skip);
            if b == e {
                break;
            }
            xs[i] = Some((b, e));
            skip = alpha;
        }
        let mut ys = alloc::vec![None; d];
        let (mut b, mut e, mut skip) = (0, m, 0);
        for i in 0..d {
            let beta = extents[i].1;
            (b, e) = self.narrow(Side::Right, b, e, &right[..beta], skip);
            if b == e {
                break;
            }
            ys[i] = Some((b, e));
            skip = beta;
        }
        Ok((0..d).map(|i| self.hits_in(j_q, xs[i], ys[i])).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::super::Mode;
    use super::*;
    use crate::oracles::{oracle_hits, oracle_occurrences};
    use crate::sampling::minimal_rotation;
    use proptest::prelude::*;

    const T: &[u8] = b"aabaaabcbda";
    const Q: &[u8] = b"aacabaaaae";

    fn both(t: &[u8], ell: usize) -> [TextIndex; 2] {
        [TextIndex::build(t, ell, Mode::Range).unwrap(), TextIndex::build(t, ell, Mode::OneSided).unwrap()]
    }

    #[test]
    fn example_hit() {
        for ix in both(T, 5) {
            let hq = HitQuery { j_q: 6, alpha: 3, beta: 3 };
            assert_eq!(ix.hit_query(Q, hq).unwrap(), [Hit { j_q: 6, j_t: 4 }]);
            assert_eq!(ix.hit_query(b"aaxaa", HitQuery { j_q: 3, alpha: 3, beta: 3 }).unwrap(), []);
        }
    }

    #[test]
    fn hit_errors() {
        let ix = TextIndex::build(T, 5, Mode::Range).unwrap();
        assert_eq!(
            ix.hit_query(Q, HitQuery { j_q: 6, alpha: 2, beta: 3 }),
            Err(Error::ExtentTooSmall { sum: 5, need: 6 })
        );
        assert_eq!(ix.hit_query(Q, HitQuery { j_q: 2, alpha: 3, beta: 3 }), Err(Error::ExtentOutOfBounds));
        assert_eq!(ix.hit_query(Q, HitQuery { j_q: 9, alpha: 3, beta: 3 }), Err(Error::ExtentOutOfBounds));
    }

    #[test]
    fn unary_hits() {
        let ix = TextIndex::build(b"aaaa", 2, Mode::Range).unwrap();
        let hits: Vec<_> =
            ix.hit_query(b"aa", HitQuery { j_q: 1, alpha: 1, beta: 2 }).unwrap().iter().map(|h| h.j_t).collect();
        assert_eq!(hits, oracle_hits(b"aaaa", &[1, 2, 3], b"aa", 1, 1, 2));
        assert_eq!(hits, [1, 2, 3]);
    }

    #[test]
    fn example_searches() {
        for ix in both(T, 5) {
            for search in [TextIndex::pattern_search, TextIndex::pattern_search_onesided, TextIndex::search] {
                assert_eq!(search(&ix, b"abaaa").unwrap(), [2]);
                assert_eq!(search(&ix, T).unwrap(), [1]);
                assert_eq!(search(&ix, b"bcbda").unwrap(), [7]);
                assert_eq!(search(&ix, b"abaa"), Err(Error::PatternTooShort { len: 4, ell: 5 }));
                assert_eq!(search(&ix, b"abaaz").unwrap(), []);
            }
        }
        // "abaaa": anchor 3 and |Q|-j+1 = 3 ≥ j, so the right side is searched
        assert_eq!(minimal_rotation(b"abaaa").unwrap(), 3);
    }

    #[test]
    fn multi_fragment() {
        let ix = TextIndex::build(T, 5, Mode::Range).unwrap();
        let got = ix.multi_fragment_query(Q, 6, &[(3, 3), (2, 4)]).unwrap();
        assert_eq!(got[0], [Hit { j_q: 6, j_t: 4 }]);
        assert_eq!(got[1], ix.hit_query(Q, HitQuery { j_q: 6, alpha: 2, beta: 4 }).unwrap());
        assert_eq!(
            ix.multi_fragment_query(Q, 6, &[(3, 3)]).unwrap(),
            [ix.hit_query(Q, HitQuery { j_q: 6, alpha: 3, beta: 3 }).unwrap()]
        );
        assert_eq!(ix.multi_fragment_query(Q, 6, &[(3, 3), (3, 3)]), Err(Error::NonMonotoneExtents));
        assert!(ix.multi_fragment_query(Q, 6, &[(3, 4)]).is_err());
    }

    fn text_strategy() -> impl Strategy<Value = Vec<u8>> {
        (1usize..4).prop_flat_map(|s| proptest::collection::vec(b'a'..b'a' + s as u8, 1..80))
    }

    proptest! {
        #[test]
        fn searches_match_naive(t in text_strategy(), ell in 1usize..6, from in 0usize..80, len in 0usize..12, r in 0usize..3) {
            prop_assume!(ell <= t.len() && r < ell);
            let from = from % t.len();
            // a pattern taken from the text half of the time, perturbed otherwise
            let mut q = t[from..(from + ell + len).min(t.len())].to_vec();
            if len % 2 == 1 && !q.is_empty() {
                let i = from % q.len();
                q[i] = b'a' + (q[i] - b'a' + 1) % 3;
            }
            prop_assume!(q.len() >= ell);
            let expect = oracle_occurrences(&t, &q);
            for ix in both(&t, ell) {
                prop_assert_eq!(ix.pattern_search(&q).unwrap(), expect.clone());
                prop_assert_eq!(ix.pattern_search_onesided(&q).unwrap(), expect.clone());
            }
            let reduced = TextIndex::build_reduced(&t, ell, r, Mode::Range).unwrap();
            prop_assert_eq!(reduced.pattern_search(&q).unwrap(), expect.clone());
            prop_assert_eq!(reduced.pattern_search_onesided(&q).unwrap(), expect);
        }

        #[test]
        fn hits_match_brute_force(
            t in text_strategy(),
            q in proptest::collection::vec(b'a'..b'c', 2..20),
            ell in 1usize..6,
            j in 1usize..20,
            alpha in 1usize..8,
            beta in 1usize..8,
        ) {
            prop_assume!(ell <= t.len() && j <= q.len() && alpha <= j && j - 1 + beta <= q.len());
            prop_assume!(alpha + beta > ell);
            for ix in both(&t, ell) {
                let got: Vec<_> = ix.hit_query(&q, HitQuery { j_q: j, alpha, beta }).unwrap().iter().map(|h| h.j_t).collect();
                prop_assert_eq!(got, oracle_hits(&t, &ix.anchors(), &q, j, alpha, beta));
            }
        }

        #[test]
        fn multi_fragment_matches_single(t in text_strategy(), q in proptest::collection::vec(b'a'..b'c', 8..20), ell in 2usize..6, j in 1usize..20, d in 1usize..6) {
            prop_assume!(ell <= t.len() && j <= q.len());
            let ix = TextIndex::build(&t, ell, Mode::Range).unwrap();
            let extents: Vec<_> = (0..d.min(ell)).map(|i| (ell - i, i + 1)).filter(|&(a, b)| a <= j && j - 1 + b <= q.len()).collect();
            let got = ix.multi_fragment_query(&q, j, &extents).unwrap();
            for (hits, &(alpha, beta)) in got.iter().zip(&extents) {
                prop_assert_eq!(hits, &ix.hit_query(&q, HitQuery { j_q: j, alpha, beta }).unwrap());
            }
        }
    }
}
