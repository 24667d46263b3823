use alloc::vec::Vec;

use super::SeedHit;
use crate::{Error, Result};

/// Levenshtein distance with unit costs, two DP rows over the shorter
/// string.
///
/// ```
/// use bdanchors_core::similarity::edit_distance;
/// assert_eq!(edit_distance(b"aabaaabcbda", b"aacaaaccbda"), 2);
/// ```
pub fn edit_distance(a: &[u8], b: &[u8]) -> usize {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if short.is_empty() {
        return long.len();
    }
    let mut prev: Vec<usize> = (0..=short.len()).collect();
    let mut cur = alloc::vec![0usize; short.len() + 1];
    for (i, &x) in long.iter().enumerate() {
        cur[0] = i + 1;
        for (j, &y) in short.iter().enumerate() {
            let sub = prev[j] + usize::from(x != y);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    prev[short.len()]
}

/// A seed occurrence as half-open 0-based spans in both strings.
#[derive(Clone, Copy)]
struct Block {
    q: usize,
    s: usize,
    len: usize,
}

/// Upper bound on `d_E(q, s)` from a chain of seeds.
///
/// Each chained hit covers `ℓ` equal letters in both strings. Where two
/// consecutive seed blocks overlap, the overlap is split at its midpoint
/// between them, so the kept blocks and the gaps between them partition
/// both strings. The bound is the sum of exact edit distances of the gaps,
/// including the ones before the first and after the last block.
pub fn close_gaps_ub(q: &[u8], s: &[u8], chain: &[SeedHit], ell: usize) -> Result<usize> {
    let mut blocks: Vec<Block> = Vec::with_capacity(chain.len());
    let mut prev: Option<(usize, usize)> = None;
    for h in chain {
        let stale = Error::StaleChain { q: h.q_pos, s: h.s_pos };
        if h.alpha == 0 || h.alpha > ell || h.q_pos < h.alpha || h.s_pos < h.alpha {
            return Err(stale);
        }
        let b = Block { q: h.q_pos - h.alpha, s: h.s_pos - h.alpha, len: ell };
        if b.q + ell > q.len() || b.s + ell > s.len() || q[b.q..b.q + ell] != s[b.s..b.s + ell] {
            return Err(stale);
        }
        if prev.is_some_and(|(pq, ps)| h.q_pos <= pq || h.s_pos <= ps) {
            return Err(stale);
        }
        prev = Some((h.q_pos, h.s_pos));
        let Some(last) = blocks.last_mut() else {
            blocks.push(b);
            continue;
        };
        // a block may start before the previous one when α differs
        let overlap = (last.q + last.len).saturating_sub(b.q).max((last.s + last.len).saturating_sub(b.s));
        let from_last = (overlap / 2).min(last.len);
        let from_new = overlap - from_last;
        if from_new >= b.len {
            // fully inside the previous block once aligned, nothing to add
            continue;
        }
        last.len -= from_last;
        if last.len == 0 {
            blocks.pop();
        }
        blocks.push(Block { q: b.q + from_new, s: b.s + from_new, len: b.len - from_new });
    }
    let (mut qi, mut si, mut ub) = (0, 0, 0);
    for b in &blocks {
        ub += edit_distance(&q[qi..b.q], &s[si..b.s]);
        qi = b.q + b.len;
        si = b.s + b.len;
    }
    Ok(ub + edit_distance(&q[qi..], &s[si..]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::oracle_edit_distance;
    use crate::similarity::lis_chain;
    use proptest::prelude::*;

    #[test]
    fn distances() {
        assert_eq!(edit_distance(b"abc", b"abc"), 0);
        assert_eq!(edit_distance(b"abc", b""), 3);
        assert_eq!(edit_distance(b"", b"abc"), 3);
        assert_eq!(edit_distance(b"kitten", b"sitting"), 3);
    }

    #[test]
    fn ub_examples() {
        let q = b"aacabaaaae";
        let s = b"aabaaabcbda";
        assert_eq!(close_gaps_ub(q, s, &[], 5).unwrap(), edit_distance(q, s));
        let chain = [SeedHit { q_pos: 6, s_pos: 4, alpha: 3 }];
        let ub = close_gaps_ub(q, s, &chain, 5).unwrap();
        // gaps "aac" / "a" and "ae" / "bcbda"
        assert_eq!(ub, edit_distance(b"aac", b"a") + edit_distance(b"ae", b"bcbda"));
        assert!(ub >= edit_distance(q, s));
        let same = [SeedHit { q_pos: 3, s_pos: 3, alpha: 1 }, SeedHit { q_pos: 5, s_pos: 5, alpha: 2 }];
        assert_eq!(close_gaps_ub(s, s, &same, 5).unwrap(), 0);
        assert_eq!(
            close_gaps_ub(q, s, &[SeedHit { q_pos: 6, s_pos: 5, alpha: 3 }], 5),
            Err(Error::StaleChain { q: 6, s: 5 })
        );
    }

    fn planted() -> impl Strategy<Value = (Vec<u8>, Vec<u8>, Vec<SeedHit>, usize)> {
        (proptest::collection::vec(b'a'..b'd', 4..40), proptest::collection::vec((0usize..40, 0u8..4), 0..6), 2usize..5)
            .prop_map(|(q, edits, ell)| {
                let mut s = q.clone();
                for (at, c) in edits {
                    let at = at % (s.len() + 1);
                    match c {
                        0 if at < s.len() => {
                            s.remove(at);
                        }
                        1 => s.insert(at, b'd'),
                        _ if at < s.len() => s[at] = b'a' + c,
                        _ => {}
                    }
                }
                // every shared length-ℓ block is a seed candidate
                let mut hits = Vec::new();
                for i in 0..q.len().saturating_sub(ell - 1) {
                    for j in 0..s.len().saturating_sub(ell - 1) {
                        if q[i..i + ell] == s[j..j + ell] {
                            let alpha = 1 + (i + j) % ell;
                            hits.push(SeedHit { q_pos: i + alpha, s_pos: j + alpha, alpha });
                        }
                    }
                }
                hits.sort_by_key(|h| (h.q_pos, h.s_pos));
                (q, s, hits, ell)
            })
    }

    proptest! {
        #[test]
        fn distance_matches_table(a in proptest::collection::vec(b'a'..b'd', 0..30), b in proptest::collection::vec(b'a'..b'd', 0..30)) {
            prop_assert_eq!(edit_distance(&a, &b), oracle_edit_distance(&a, &b));
        }

        #[test]
        fn ub_bounds_distance((q, s, hits, ell) in planted()) {
            let chain = lis_chain(&hits);
            let d = oracle_edit_distance(&q, &s);
            prop_assert!(close_gaps_ub(&q, &s, &chain, ell).unwrap() >= d);
            prop_assert_eq!(close_gaps_ub(&q, &s, &[], ell).unwrap(), d);
        }
    }
}
