use alloc::vec::Vec;

use super::SeedHit;

/// A longest chain of hits strictly increasing in both `q_pos` and `s_pos`.
///
/// `hits` must be sorted by `q_pos`. Patience sorting with predecessor
/// links, `O(h log h)`. Hits sharing a `q_pos` are fed in decreasing
/// `s_pos` order so at most one of them can enter a chain; among longest
/// chains the one ending at the last pile's top is returned.
///
/// ```
/// use bdanchors_core::similarity::{lis_chain, SeedHit};
///
/// let hit = |q, s| SeedHit { q_pos: q, s_pos: s, alpha: 1 };
/// let chain = lis_chain(&[hit(1, 5), hit(2, 3), hit(3, 4), hit(4, 8)]);
/// assert_eq!(chain, [hit(2, 3), hit(3, 4), hit(4, 8)]);
/// ```
pub fn lis_chain(hits: &[SeedHit]) -> Vec<SeedHit> {
    debug_assert!(hits.windows(2).all(|w| w[0].q_pos <= w[1].q_pos));
    let mut tops: Vec<usize> = Vec::new();
    let mut prev = alloc::vec![usize::MAX; hits.len()];
    let mut g = 0;
    while g < hits.len() {
        let mut end = g;
        while end < hits.len() && hits[end].q_pos == hits[g].q_pos {
            end += 1;
        }
        let mut group: Vec<usize> = (g..end).collect();
        group.sort_by(|&a, &b| hits[b].s_pos.cmp(&hits[a].s_pos).then(a.cmp(&b)));
        for i in group {
            let s = hits[i].s_pos;
            let pile = tops.partition_point(|&t| hits[t].s_pos < s);
            if pile > 0 {
                prev[i] = tops[pile - 1];
            }
            if pile == tops.len() {
                tops.push(i);
            } else {
                tops[pile] = i;
            }
        }
        g = end;
    }
    let mut chain = Vec::with_capacity(tops.len());
    let mut cur = tops.last().copied().unwrap_or(usize::MAX);
    while cur != usize::MAX {
        chain.push(hits[cur]);
        cur = prev[cur];
    }
    chain.reverse();
    chain
}

/// Letters of the query covered by the chained seeds: the size of the union
/// of `[q-α+1, q+β-1]` over the chain (`β = ℓ+1-α`), clamped to `[1, qlen]`.
pub fn estimate_identity(chain: &[SeedHit], ell: usize, qlen: usize) -> usize {
    let mut spans: Vec<(usize, usize)> = chain
        .iter()
        .map(|h| {
            let beta = ell + 1 - h.alpha;
            let lo = (h.q_pos + 1).saturating_sub(h.alpha).max(1);
            let hi = (h.q_pos + beta - 1).min(qlen);
            (lo, hi)
        })
        .filter(|&(lo, hi)| lo <= hi)
        .collect();
    spans.sort_unstable();
    let mut total = 0;
    let mut reach = 0;
    for (lo, hi) in spans {
        if hi > reach {
            total += hi - lo.max(reach + 1) + 1;
            reach = hi;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::oracle_lis_len;
    use proptest::prelude::*;

    fn hit(q: usize, s: usize) -> SeedHit {
        SeedHit { q_pos: q, s_pos: s, alpha: 3 }
    }

    #[test]
    fn small_cases() {
        assert_eq!(lis_chain(&[]), []);
        assert_eq!(lis_chain(&[hit(4, 2)]), [hit(4, 2)]);
        let anti: Vec<_> = (1..=6).map(|i| hit(i, 10 - i)).collect();
        assert_eq!(lis_chain(&anti).len(), 1);
        // equal q positions never chain together
        assert_eq!(lis_chain(&[hit(1, 1), hit(1, 2), hit(1, 3)]).len(), 1);
        assert_eq!(lis_chain(&[hit(1, 1), hit(2, 1), hit(3, 1)]).len(), 1);
    }

    #[test]
    fn identity_examples() {
        assert_eq!(estimate_identity(&[], 5, 10), 0);
        assert_eq!(estimate_identity(&[hit(6, 4)], 5, 10), 5);
        assert_eq!(estimate_identity(&[hit(3, 3), hit(9, 9)], 5, 20), 10);
        // [1,5] and [3,7] overlap in three letters
        assert_eq!(estimate_identity(&[hit(3, 3), hit(5, 5)], 5, 20), 7);
        // clamped to the query
        assert_eq!(estimate_identity(&[hit(9, 9)], 5, 9), 3);
    }

    proptest! {
        #[test]
        fn chain_is_a_longest_increasing_one(mut pairs in proptest::collection::vec((1usize..8, 1usize..8), 0..13)) {
            pairs.sort_by_key(|p| p.0);
            let hits: Vec<_> = pairs.iter().map(|&(q, s)| hit(q, s)).collect();
            let chain = lis_chain(&hits);
            prop_assert!(chain.windows(2).all(|w| w[0].q_pos < w[1].q_pos && w[0].s_pos < w[1].s_pos));
            prop_assert!(chain.iter().all(|h| hits.contains(h)));
            prop_assert_eq!(chain.len(), oracle_lis_len(&pairs));
        }

        #[test]
        fn identity_matches_marking(qs in proptest::collection::vec((1usize..30, 1usize..5), 0..8), qlen in 1usize..30) {
            let chain: Vec<_> = qs.iter().map(|&(q, a)| SeedHit { q_pos: q, s_pos: q, alpha: a }).collect();
            let ell = 5;
            let mut mark = alloc::vec![false; qlen + 1];
            for h in &chain {
                let beta = ell + 1 - h.alpha;
                for p in (h.q_pos as isize - h.alpha as isize + 1)..(h.q_pos + beta) as isize {
                    if p >= 1 && p as usize <= qlen {
                        mark[p as usize] = true;
                    }
                }
            }
            prop_assert_eq!(estimate_identity(&chain, ell, qlen), mark.iter().filter(|&&m| m).count());
        }
    }
}
