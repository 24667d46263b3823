//! Suffix array by prefix doubling and the derived k-mer rank array.

use alloc::vec;
use alloc::vec::Vec;

/// Suffix array of `t` (0-based starts), `O(n log n)` via prefix doubling
/// with counting sorts.
pub(crate) fn suffix_array<T: Ord + Copy>(t: &[T]) -> Vec<usize> {
    let n = t.len();
    if n == 0 {
        return Vec::new();
    }
    let mut sa: Vec<usize> = (0..n).collect();
    sa.sort_unstable_by_key(|&i| t[i]);
    // ranks start at 1; 0 stands for "past the end"
    let mut rank = vec![0usize; n];
    let mut classes = 1;
    rank[sa[0]] = 1;
    for w in 1..n {
        if t[sa[w]] != t[sa[w - 1]] {
            classes += 1;
        }
        rank[sa[w]] = classes;
    }
    let mut tmp = vec![0usize; n];
    let mut cnt = vec![0usize; n + 1];
    let mut h = 1;
    while classes < n {
        let second = |i: usize| if i + h < n { rank[i + h] } else { 0 };
        // order by second key: suffixes without a second half come first
        let mut order = Vec::with_capacity(n);
        order.extend(n.saturating_sub(h)..n);
        order.extend(sa.iter().filter(|&&i| i >= h).map(|&i| i - h));
        // stable counting sort by first key
        cnt.iter_mut().for_each(|c| *c = 0);
        for &i in &order {
            cnt[rank[i]] += 1;
        }
        for r in 1..=n {
            cnt[r] += cnt[r - 1];
        }
        for &i in order.iter().rev() {
            cnt[rank[i]] -= 1;
            sa[cnt[rank[i]]] = i;
        }
        tmp[sa[0]] = 1;
        classes = 1;
        for w in 1..n {
            let (a, b) = (sa[w - 1], sa[w]);
            if rank[a] != rank[b] || second(a) != second(b) {
                classes += 1;
            }
            tmp[b] = classes;
        }
        core::mem::swap(&mut rank, &mut tmp);
        h *= 2;
    }
    sa
}

/// Longest common prefix of each suffix with its predecessor in `sa`
/// (Kasai et al.); `lcp[0] = 0`.
pub(crate) fn lcp_array(t: &[u8], sa: &[usize]) -> Vec<usize> {
    let n = t.len();
    let mut inv = vec![0usize; n];
    for (r, &i) in sa.iter().enumerate() {
        inv[i] = r;
    }
    let mut lcp = vec![0usize; n];
    let mut h = 0usize;
    for i in 0..n {
        if inv[i] > 0 {
            let j = sa[inv[i] - 1];
            while i + h < n && j + h < n && t[i + h] == t[j + h] {
                h += 1;
            }
            lcp[inv[i]] = h;
            h = h.saturating_sub(1);
        } else {
            h = 0;
        }
    }
    lcp
}

/// Dense lexicographic rank of each k-mer `t[i..i+k]`, `i ∈ 0..=n-k`.
/// Equal k-mers share a rank. Also returns the first occurrence of each rank.
pub(crate) fn kmer_ranks(t: &[u8], k: usize) -> (Vec<u32>, Vec<usize>) {
    let n = t.len();
    debug_assert!(k >= 1 && k <= n);
    let sa = suffix_array(t);
    let lcp = lcp_array(t, &sa);
    let mut ranks = vec![0u32; n - k + 1];
    let mut first = Vec::new();
    let mut current: Option<u32> = None;
    for (r, &i) in sa.iter().enumerate() {
        if i + k > n {
            // shorter than k: closes the current group
            current = None;
            continue;
        }
        let same = current.is_some() && r > 0 && lcp[r] >= k;
        let id = if same {
            current.unwrap()
        } else {
            first.push(i);
            first.len() as u32 - 1
        };
        let f = &mut first[id as usize];
        *f = (*f).min(i);
        ranks[i] = id;
        current = Some(id);
    }
    (ranks, first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn banana() {
        assert_eq!(suffix_array(b"banana"), vec![5, 3, 1, 0, 4, 2]);
        assert_eq!(lcp_array(b"banana", &suffix_array(b"banana")), vec![0, 1, 3, 0, 0, 2]);
    }

    proptest! {
        #[test]
        fn suffix_array_is_sorted(t in proptest::collection::vec(b'a'..=b'c', 0..80)) {
            let sa = suffix_array(&t);
            let mut naive: Vec<usize> = (0..t.len()).collect();
            naive.sort_by_key(|&i| &t[i..]);
            prop_assert_eq!(sa, naive);
        }

        #[test]
        fn kmer_ranks_follow_lex_order(t in proptest::collection::vec(b'a'..=b'c', 1..80), k in 1usize..6) {
            prop_assume!(k <= t.len());
            let (ranks, first) = kmer_ranks(&t, k);
            for i in 0..ranks.len() {
                prop_assert_eq!(first[ranks[i] as usize], (0..=i).find(|&j| t[j..j + k] == t[i..i + k]).unwrap());
                for j in 0..ranks.len() {
                    prop_assert_eq!(ranks[i].cmp(&ranks[j]), t[i..i + k].cmp(&t[j..j + k]));
                }
            }
        }
    }
}
