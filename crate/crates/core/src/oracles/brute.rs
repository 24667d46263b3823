use alloc::vec;
use alloc::vec::Vec;

use crate::sampling::{Order, Sample, Scheme, SchemeParams};
use crate::{Error, Result};

/// Leftmost minimal rotation by materializing and comparing every rotation.
pub fn oracle_minimal_rotation(x: &[u8]) -> Result<usize> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let rotations: Vec<Vec<u8>> = (0..x.len()).map(|s| [&x[s..], &x[..s]].concat()).collect();
    let mut best = 0;
    for (s, r) in rotations.iter().enumerate() {
        if *r < rotations[best] {
            best = s;
        }
    }
    Ok(best + 1)
}

/// bd-anchors as 1-based positions, one rotation sort per window.
pub fn oracle_bd_anchors(t: &[u8], ell: usize) -> Vec<usize> {
    oracle_reduced_bd_anchors(t, ell, 0)
}

/// Reduced bd-anchors: per window, the leftmost minimum among the rotations
/// starting in the first `ℓ-r` positions, each rotation materialized.
pub fn oracle_reduced_bd_anchors(t: &[u8], ell: usize, r: usize) -> Vec<usize> {
    if ell == 0 || ell > t.len() || r >= ell {
        return Vec::new();
    }
    let mut out: Vec<usize> = (0..=t.len() - ell)
        .map(|i| {
            let x = &t[i..i + ell];
            let best = (0..ell - r).map(|s| ([&x[s..], &x[..s]].concat(), s)).min().unwrap().1;
            i + best + 1
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Standard minimizers straight from the definition: every position of a
/// lexicographically minimal k-mer in every window.
pub fn oracle_minimizers(t: &[u8], w: usize, k: usize) -> Result<Sample> {
    let n = t.len();
    if w == 0 || k == 0 || w + k - 1 > n {
        return Err(Error::BadMinimizerParams { w, k, n });
    }
    let mut first = vec![usize::MAX; n];
    for i in 0..=n - (w + k - 1) {
        let min = (i..i + w).map(|p| &t[p..p + k]).min().unwrap();
        for p in i..i + w {
            if &t[p..p + k] == min && first[p] == usize::MAX {
                first[p] = i;
            }
        }
    }
    Ok(Sample::from_first_windows(&first, SchemeParams::minimizers(Scheme::MinStd, w, k, Order::Lex)))
}

/// All 1-based starts of `q` in `t`, by direct comparison at every offset.
pub fn oracle_occurrences(t: &[u8], q: &[u8]) -> Vec<usize> {
    if q.is_empty() || q.len() > t.len() {
        return Vec::new();
    }
    (0..=t.len() - q.len()).filter(|&s| &t[s..s + q.len()] == q).map(|s| s + 1).collect()
}

/// Every text anchor `j_t` (1-based, from `anchors`) forming an
/// `(α,β)`-hit with query anchor `j_q`, by checking the two equalities.
pub fn oracle_hits(t: &[u8], anchors: &[usize], q: &[u8], j_q: usize, alpha: usize, beta: usize) -> Vec<usize> {
    let left = &q[j_q - alpha..j_q];
    let right = &q[j_q - 1..j_q - 1 + beta];
    let mut out: Vec<usize> = anchors
        .iter()
        .copied()
        .filter(|&j| {
            j >= alpha && j - 1 + beta <= t.len() && &t[j - alpha..j] == left && &t[j - 1..j - 1 + beta] == right
        })
        .collect();
    out.sort_unstable();
    out
}

/// Length of a longest chain strictly increasing in both coordinates, by
/// enumerating all subsets (use for at most ~20 pairs).
pub fn oracle_lis_len(pairs: &[(usize, usize)]) -> usize {
    assert!(pairs.len() < 25, "subset enumeration is exponential");
    let mut best = 0;
    for mask in 0u32..(1 << pairs.len()) {
        let chosen: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        if chosen.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1) {
            best = best.max(chosen.len());
        }
    }
    best
}

/// Levenshtein distance with the full `(|a|+1)×(|b|+1)` table.
pub fn oracle_edit_distance(a: &[u8], b: &[u8]) -> usize {
    let cols = b.len() + 1;
    let mut d = vec![0usize; (a.len() + 1) * cols];
    for i in 0..=a.len() {
        d[i * cols] = i;
    }
    for (j, cell) in d[..cols].iter_mut().enumerate() {
        *cell = j;
    }
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            let sub = d[(i - 1) * cols + j - 1] + usize::from(a[i - 1] != b[j - 1]);
            let del = d[(i - 1) * cols + j] + 1;
            let ins = d[i * cols + j - 1] + 1;
            d[i * cols + j] = sub.min(del).min(ins);
        }
    }
    d[a.len() * cols + b.len()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_oracle() {
        assert_eq!(oracle_minimal_rotation(b"abaaa"), Ok(3));
        assert_eq!(oracle_minimal_rotation(b"aaaa"), Ok(1));
        assert_eq!(oracle_minimal_rotation(b""), Err(Error::EmptyInput));
    }

    #[test]
    fn minimizer_oracle() {
        assert_eq!(oracle_minimizers(b"aabaaabcbda", 3, 3).unwrap().positions(), &[1, 4, 5, 6, 7]);
        assert_eq!(oracle_minimizers(b"abaaa", 3, 3).unwrap().positions(), &[3]);
        assert_eq!(oracle_minimizers(b"aaaa", 2, 2).unwrap().positions(), &[1, 2, 3]);
    }

    #[test]
    fn occurrence_oracle() {
        assert_eq!(oracle_occurrences(b"aabaaabcbda", b"abaaa"), vec![2]);
        assert_eq!(oracle_occurrences(b"ab", b"abc"), Vec::<usize>::new());
        assert_eq!(oracle_occurrences(b"aaa", b"a"), vec![1, 2, 3]);
    }

    #[test]
    fn hit_oracle_example() {
        let t = b"aabaaabcbda";
        assert_eq!(oracle_bd_anchors(t, 5), vec![4, 5, 6, 11]);
        assert_eq!(oracle_hits(t, &[4, 5, 6, 11], b"aacabaaaae", 6, 3, 3), vec![4]);
    }

    #[test]
    fn lis_oracle() {
        assert_eq!(oracle_lis_len(&[(1, 5), (2, 3), (3, 4), (4, 8)]), 3);
        assert_eq!(oracle_lis_len(&[]), 0);
        assert_eq!(oracle_lis_len(&[(1, 2), (1, 3)]), 1);
    }

    #[test]
    fn edit_oracle() {
        assert_eq!(oracle_edit_distance(b"kitten", b"sitting"), 3);
        assert_eq!(oracle_edit_distance(b"", b"abc"), 3);
        assert_eq!(oracle_edit_distance(b"aabaaabcbda", b"aacaaaccbda"), 2);
    }
}
