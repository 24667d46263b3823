//! Top-K similarity search under edit distance.
//!
//! The dictionary is indexed as one text whose records are separate
//! segments. A query is sampled with bd-anchors; each anchor with its
//! leftmost window becomes a seed whose `(α,β)`-hits are collected per
//! record. Hits are chained by a longest increasing subsequence, the chain
//! gives an identity score `E`, and optionally an edit-distance upper bound
//! is computed by aligning the gaps between chained seeds.

mod align;
mod chain;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::index::{HitQuery, Mode, TextIndex};
use crate::sampling::bd_anchors;
use crate::{Error, Result};

pub use align::{close_gaps_ub, edit_distance};
pub use chain::{estimate_identity, lis_chain};

/// One `(α,β)`-hit between a query and a dictionary record, in 1-based
/// local coordinates, with `β = ℓ + 1 - α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SeedHit {
    pub q_pos: usize,
    pub s_pos: usize,
    pub alpha: usize,
}

/// All hits of a query in one record, sorted by `(q_pos, s_pos)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedHitList {
    pub string_id: usize,
    pub hits: Vec<SeedHit>,
}

/// A ranked dictionary record.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Candidate {
    pub string_id: usize,
    /// Estimated identity score.
    pub e: usize,
    /// Edit-distance upper bound, when the record was verified.
    pub ub: Option<usize>,
    /// Number of hits collected for the record.
    pub hits: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QueryParams {
    pub k: usize,
    /// Records with fewer hits are dropped.
    pub tau: usize,
    /// Records with `E ≥ E_K - δ` are verified when `δ > 0`.
    pub delta: usize,
}

impl QueryParams {
    pub fn new(k: usize) -> Self {
        QueryParams { k, tau: 0, delta: 0 }
    }
}

/// Result of [`top_k_query`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopK {
    pub candidates: Vec<Candidate>,
    /// Fewer than `K` records survived filtering.
    pub short: bool,
    /// `K`-th largest identity score among survivors (the smallest one if
    /// fewer than `K` survived).
    pub e_k: Option<usize>,
    /// Records passed to the gap-closing DP, in call order.
    pub verified: Vec<usize>,
}

/// Dictionary of strings indexed for top-K queries.
#[derive(Debug, Clone)]
pub struct DictionaryIndex {
    strings: Vec<Vec<u8>>,
    // 0-based start of every record in the concatenation
    starts: Vec<usize>,
    inner: TextIndex,
    ell: usize,
}

impl DictionaryIndex {
    /// Concatenates the records and indexes their bd-anchors, computed
    /// record by record so no window crosses a record boundary.
    pub fn build(strings: Vec<Vec<u8>>, ell: usize) -> Result<Self> {
        if strings.is_empty() {
            return Err(Error::EmptyDictionary);
        }
        if ell == 0 {
            return Err(Error::ZeroWindow);
        }
        let total = strings.iter().map(Vec::len).sum();
        let mut text = Vec::with_capacity(total);
        let mut starts = Vec::with_capacity(strings.len());
        let mut anchors = Vec::new();
        for (id, s) in strings.iter().enumerate() {
            if s.len() < ell {
                return Err(Error::RecordTooShort { id, len: s.len(), ell });
            }
            let base = text.len();
            starts.push(base);
            anchors.extend(bd_anchors(s, ell)?.positions().iter().map(|p| base + p - 1));
            text.extend_from_slice(s);
        }
        let inner = TextIndex::build_segmented(text, starts.clone(), anchors, ell, Mode::Range);
        Ok(DictionaryIndex { strings, starts, inner, ell })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn strings(&self) -> &[Vec<u8>] {
        &self.strings
    }

    pub fn len(&self) -> usize {
        self.strings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    /// The index over the concatenated records.
    pub fn text_index(&self) -> &TextIndex {
        &self.inner
    }

    /// Record id and 1-based local offset of a 1-based global position.
    pub fn locate(&self, global: usize) -> (usize, usize) {
        let id = self.starts.partition_point(|&b| b < global) - 1;
        (id, global - self.starts[id])
    }

    /// Global 1-based anchor positions.
    pub fn anchors(&self) -> Vec<usize> {
        self.inner.anchors()
    }
}

/// One seed per distinct bd-anchor of `q`: the leftmost length-`ℓ` window
/// containing it, as `(j_q, α, β)` with `α + β = ℓ + 1`.
pub fn query_seeds(q: &[u8], ell: usize) -> Result<Vec<HitQuery>> {
    if q.len() < ell {
        return Err(Error::PatternTooShort { len: q.len(), ell });
    }
    let sample = bd_anchors(q, ell)?;
    Ok(sample
        .positions()
        .iter()
        .zip(sample.leftmost_windows())
        .map(|(&j, &i)| {
            let alpha = j - i + 1;
            HitQuery { j_q: j, alpha, beta: ell + 1 - alpha }
        })
        .collect())
}

/// Hits of every seed of `q`, grouped by record.
pub fn collect_hits(dix: &DictionaryIndex, q: &[u8]) -> Result<BTreeMap<usize, SeedHitList>> {
    let mut lists: BTreeMap<usize, SeedHitList> = BTreeMap::new();
    for seed in query_seeds(q, dix.ell)? {
        for hit in dix.inner.hit_query(q, seed)? {
            let (id, s_pos) = dix.locate(hit.j_t);
            lists.entry(id).or_insert_with(|| SeedHitList { string_id: id, hits: Vec::new() }).hits.push(SeedHit {
                q_pos: seed.j_q,
                s_pos,
                alpha: seed.alpha,
            });
        }
    }
    Ok(lists)
}

/// The `K` records most similar to `q`.
///
/// Records with fewer than `τ` hits are dropped (records without any hit
/// are never candidates). Survivors are scored by the identity estimate of
/// their hit chain. With `δ = 0` the `K` best scores are returned, ties by
/// record id. Otherwise every survivor with `E ≥ E_K - δ` gets an
/// edit-distance upper bound and the `K` lowest bounds are returned, ties
/// by higher `E` then record id.
pub fn top_k_query(dix: &DictionaryIndex, q: &[u8], p: QueryParams) -> Result<TopK> {
    if p.k == 0 {
        return Err(Error::ZeroK);
    }
    let lists = collect_hits(dix, q)?;
    let mut scored: Vec<(Candidate, Vec<SeedHit>)> = lists
        .into_values()
        .filter(|l| l.hits.len() >= p.tau)
        .map(|l| {
            let chain = lis_chain(&l.hits);
            let len = dix.strings[l.string_id].len();
            let e = estimate_identity(&chain, dix.ell, q.len()).min(len);
            (Candidate { string_id: l.string_id, e, ub: None, hits: l.hits.len() }, chain)
        })
        .collect();
    scored.sort_by(|(a, _), (b, _)| b.e.cmp(&a.e).then(a.string_id.cmp(&b.string_id)));
    let e_k = scored.get(p.k.min(scored.len()).wrapping_sub(1)).map(|(c, _)| c.e);
    let mut verified = Vec::new();
    let mut candidates: Vec<Candidate> = if p.delta == 0 {
        scored.into_iter().take(p.k).map(|(c, _)| c).collect()
    } else {
        let floor = e_k.unwrap_or(0).saturating_sub(p.delta);
        let mut pool = Vec::new();
        for (mut c, chain) in scored.into_iter().filter(|(c, _)| c.e >= floor) {
            verified.push(c.string_id);
            c.ub = Some(close_gaps_ub(q, &dix.strings[c.string_id], &chain, dix.ell)?);
            pool.push(c);
        }
        pool.sort_by(|a, b| a.ub.cmp(&b.ub).then(b.e.cmp(&a.e)).then(a.string_id.cmp(&b.string_id)));
        pool.truncate(p.k);
        pool
    };
    candidates.shrink_to_fit();
    Ok(TopK { short: candidates.len() < p.k, candidates, e_k, verified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{gen_random_string, oracle_hits};

    fn dict(items: &[&[u8]], ell: usize) -> DictionaryIndex {
        DictionaryIndex::build(items.iter().map(|s| s.to_vec()).collect(), ell).unwrap()
    }

    #[test]
    fn build_examples() {
        let d = dict(&[b"aabaaabcbda"], 5);
        assert_eq!(d.anchors(), [4, 5, 6, 11]);
        let d = dict(&[b"abaaa", b"abaaa"], 5);
        assert_eq!(d.anchors(), [3, 8]);
        assert_eq!(d.locate(3), (0, 3));
        assert_eq!(d.locate(8), (1, 3));
        assert_eq!(d.locate(6), (1, 1));
        assert_eq!(
            DictionaryIndex::build(vec![b"abaaa".to_vec(), b"ab".to_vec()], 5).unwrap_err(),
            Error::RecordTooShort { id: 1, len: 2, ell: 5 }
        );
        assert_eq!(DictionaryIndex::build(Vec::new(), 5).unwrap_err(), Error::EmptyDictionary);
    }

    #[test]
    fn seeds() {
        // windows 2, 3 and 4 of "aacabaaaae" are all anchored at 6; the leftmost gives α=5
        assert_eq!(
            query_seeds(b"aacabaaaae", 5).unwrap().iter().find(|s| s.j_q == 6),
            Some(&HitQuery { j_q: 6, alpha: 5, beta: 1 })
        );
        assert_eq!(query_seeds(b"abaaa", 5).unwrap(), [HitQuery { j_q: 3, alpha: 3, beta: 3 }]);
        let unary = query_seeds(b"aaaaa", 3).unwrap();
        assert_eq!(unary, (1..=3).map(|j| HitQuery { j_q: j, alpha: 1, beta: 3 }).collect::<Vec<_>>());
        assert_eq!(query_seeds(b"ab", 3).unwrap_err(), Error::PatternTooShort { len: 2, ell: 3 });
    }

    #[test]
    fn hits_by_record() {
        let d = dict(&[b"aabaaabcbda"], 5);
        let lists = collect_hits(&d, b"abaaa").unwrap();
        assert_eq!(lists[&0].hits, [SeedHit { q_pos: 3, s_pos: 4, alpha: 3 }]);
        assert!(collect_hits(&d, b"zzzzzz").unwrap().is_empty());
    }

    #[test]
    fn self_hits_cover_every_anchor() {
        let s = gen_random_string(200, 3, 4).unwrap();
        let other = gen_random_string(200, 3, 5).unwrap();
        let d = DictionaryIndex::build(vec![other.clone(), s.clone()], 6).unwrap();
        let lists = collect_hits(&d, &s).unwrap();
        let ell = 6;
        // brute force: every (seed, anchor) pair of the record satisfying the equalities
        let local: Vec<usize> = bd_anchors(&s, ell).unwrap().positions().to_vec();
        let mut expect = Vec::new();
        for seed in query_seeds(&s, ell).unwrap() {
            for j_t in oracle_hits(&s, &local, &s, seed.j_q, seed.alpha, seed.beta) {
                expect.push(SeedHit { q_pos: seed.j_q, s_pos: j_t, alpha: seed.alpha });
            }
        }
        assert_eq!(lists[&1].hits, expect);
        for &a in &local {
            assert!(lists[&1].hits.iter().any(|h| h.q_pos == a && h.s_pos == a));
        }
        let mut other_expect = Vec::new();
        let other_anchors: Vec<usize> = bd_anchors(&other, ell).unwrap().positions().to_vec();
        for seed in query_seeds(&s, ell).unwrap() {
            for j_t in oracle_hits(&other, &other_anchors, &s, seed.j_q, seed.alpha, seed.beta) {
                other_expect.push(SeedHit { q_pos: seed.j_q, s_pos: j_t, alpha: seed.alpha });
            }
        }
        assert_eq!(lists.get(&0).map(|l| l.hits.clone()).unwrap_or_default(), other_expect);
    }

    #[test]
    fn self_ranks_first() {
        let strings: Vec<Vec<u8>> = (0..6).map(|i| gen_random_string(120, 4, i).unwrap()).collect();
        let d = DictionaryIndex::build(strings.clone(), 8).unwrap();
        for (i, s) in strings.iter().enumerate() {
            let top = top_k_query(&d, s, QueryParams::new(1)).unwrap();
            assert_eq!(top.candidates[0].string_id, i);
            assert!(top.candidates[0].e > s.len() / 2);
            assert!(top.verified.is_empty());
            let top = top_k_query(&d, s, QueryParams { k: 1, tau: 0, delta: 5 }).unwrap();
            assert_eq!(top.candidates[0].string_id, i);
            assert_eq!(top.candidates[0].ub, Some(0));
        }
    }

    #[test]
    fn tau_filters_and_short_flag() {
        let strings: Vec<Vec<u8>> = (0..4).map(|i| gen_random_string(100, 4, 10 + i).unwrap()).collect();
        let d = DictionaryIndex::build(strings.clone(), 6).unwrap();
        let top = top_k_query(&d, &strings[0], QueryParams { k: 10, tau: 1_000_000, delta: 0 }).unwrap();
        assert!(top.candidates.is_empty() && top.short);
        let a = top_k_query(&d, &strings[0], QueryParams { k: 10, tau: 0, delta: 0 }).unwrap();
        let b = top_k_query(&d, &strings[0], QueryParams { k: 10, tau: 3, delta: 0 }).unwrap();
        assert!(b.candidates.iter().all(|c| a.candidates.iter().any(|x| x.string_id == c.string_id)));
        assert_eq!(top_k_query(&d, &strings[0], QueryParams { k: 0, tau: 0, delta: 0 }).unwrap_err(), Error::ZeroK);
    }

    #[test]
    fn verification_set_respects_delta() {
        let base = gen_random_string(300, 4, 77).unwrap();
        let mut strings = vec![base.clone()];
        for i in 0..8 {
            let mut s = base.clone();
            for j in 0..(i * 6) {
                let at = (j * 37 + i * 11) % s.len();
                s[at] = b'a' + (s[at] - b'a' + 1) % 4;
            }
            strings.push(s);
        }
        strings.push(gen_random_string(300, 4, 78).unwrap());
        let d = DictionaryIndex::build(strings, 8).unwrap();
        let mut last = Vec::new();
        for delta in [1, 10, 50, 400] {
            let top = top_k_query(&d, &base, QueryParams { k: 3, tau: 0, delta }).unwrap();
            let e_k = top.e_k.unwrap();
            let all = top_k_query(&d, &base, QueryParams { k: 1000, tau: 0, delta: 0 }).unwrap();
            let expect: Vec<usize> =
                all.candidates.iter().filter(|c| c.e + delta >= e_k).map(|c| c.string_id).collect();
            assert_eq!(top.verified, expect);
            assert!(last.iter().all(|id| top.verified.contains(id)));
            last = top.verified.clone();
            let ubs: Vec<_> = top.candidates.iter().map(|c| c.ub.unwrap()).collect();
            assert!(ubs.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
