//! Wavelet matrix over a permutation, used for 2D range reporting.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone)]
struct BitVec {
    words: Vec<u64>,
    // ones before each word
    ranks: Vec<usize>,
}

impl BitVec {
    fn from_bits(bits: impl ExactSizeIterator<Item = bool>) -> Self {
        let mut words = vec![0u64; bits.len().div_ceil(64)];
        for (i, b) in bits.enumerate() {
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        let mut ranks = Vec::with_capacity(words.len() + 1);
        let mut acc = 0;
        for w in &words {
            ranks.push(acc);
            acc += w.count_ones() as usize;
        }
        ranks.push(acc);
        BitVec { words, ranks }
    }

    /// Ones in `[0, i)`.
    fn rank1(&self, i: usize) -> usize {
        let (w, b) = (i / 64, i % 64);
        if b == 0 {
            return self.ranks[w];
        }
        self.ranks[w] + (self.words[w] & ((1u64 << b) - 1)).count_ones() as usize
    }

    fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }
}

/// Static sequence of values in `0..m` supporting "report every value in
/// `[y1, y2]` stored at a position in `[x1, x2]`".
#[derive(Debug, Clone)]
pub(crate) struct WaveletMatrix {
    levels: Vec<BitVec>,
    zeros: Vec<usize>,
    bits: u32,
    len: usize,
}

impl WaveletMatrix {
    pub(crate) fn new(values: &[usize]) -> Self {
        let max = values.iter().copied().max().unwrap_or(0);
        let bits = (usize::BITS - max.leading_zeros()).max(1);
        let mut cur = values.to_vec();
        let mut next = Vec::with_capacity(cur.len());
        let mut levels = Vec::with_capacity(bits as usize);
        let mut zeros = Vec::with_capacity(bits as usize);
        for level in (0..bits).rev() {
            let bv = BitVec::from_bits(cur.iter().map(|&v| (v >> level) & 1 == 1));
            next.clear();
            next.extend(cur.iter().filter(|&&v| (v >> level) & 1 == 0));
            zeros.push(next.len());
            next.extend(cur.iter().filter(|&&v| (v >> level) & 1 == 1));
            core::mem::swap(&mut cur, &mut next);
            levels.push(bv);
        }
        WaveletMatrix { levels, zeros, bits, len: values.len() }
    }

    /// Calls `f(value)` for every value in `[y1, y2]` at a position in
    /// `[x1, x2]` (all 0-based, inclusive), in increasing value order.
    pub(crate) fn report(&self, x1: usize, x2: usize, y1: usize, y2: usize, f: &mut impl FnMut(usize)) {
        if x1 > x2 || y1 > y2 || x2 >= self.len {
            return;
        }
        self.walk(0, x1, x2 + 1, 0, y1, y2, f);
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(&self, depth: usize, b: usize, e: usize, prefix: usize, y1: usize, y2: usize, f: &mut impl FnMut(usize)) {
        if b >= e {
            return;
        }
        let rem = self.bits as usize - depth;
        let lo = prefix << rem;
        let hi = lo + (1usize << rem) - 1;
        if hi < y1 || lo > y2 {
            return;
        }
        if depth == self.bits as usize {
            (b..e).for_each(|_| f(prefix));
            return;
        }
        let bv = &self.levels[depth];
        let z = self.zeros[depth];
        self.walk(depth + 1, bv.rank0(b), bv.rank0(e), prefix << 1, y1, y2, f);
        self.walk(depth + 1, z + bv.rank1(b), z + bv.rank1(e), (prefix << 1) | 1, y1, y2, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_across_words() {
        let bv = BitVec::from_bits((0..200).map(|i| i % 3 == 0));
        for i in 0..=200 {
            assert_eq!(bv.rank1(i), (0..i).filter(|j| j % 3 == 0).count());
        }
    }

    #[test]
    fn single_value() {
        let wm = WaveletMatrix::new(&[0]);
        let mut out = Vec::new();
        wm.report(0, 0, 0, 0, &mut |v| out.push(v));
        assert_eq!(out, [0]);
    }

    proptest! {
        #[test]
        fn reports_match_scan(
            perm in Just((0..70usize).collect::<Vec<_>>()).prop_shuffle(),
            a in 0usize..70, b in 0usize..70, c in 0usize..70, d in 0usize..70,
        ) {
            let wm = WaveletMatrix::new(&perm);
            let (x1, x2, y1, y2) = (a.min(b), a.max(b), c.min(d), c.max(d));
            let mut got = Vec::new();
            wm.report(x1, x2, y1, y2, &mut |v| got.push(v));
            let mut expect: Vec<_> = perm[x1..=x2].iter().copied().filter(|&v| y1 <= v && v <= y2).collect();
            expect.sort_unstable();
            prop_assert_eq!(got, expect);
        }
    }
}
