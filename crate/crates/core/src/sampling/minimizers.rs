use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::sample::{Order, Sample, Scheme, SchemeParams};
use super::suffix_array::kmer_ranks;
use crate::{Error, Result};

fn check(n: usize, w: usize, k: usize) -> Result<()> {
    if w == 0 || k == 0 || w + k - 1 > n {
        return Err(Error::BadMinimizerParams { w, k, n });
    }
    Ok(())
}

/// Dense rank of every k-mer under `order`; equal k-mers share a rank.
fn ranks(t: &[u8], k: usize, order: Order) -> Vec<u32> {
    let (lex, first) = kmer_ranks(t, k);
    match order {
        Order::Lex => lex,
        Order::Hashed(seed) => {
            let hashes = rolling_hashes(t, k, seed);
            // key of a group: (hash, first occurrence); collisions fall back to position
            let mut groups: Vec<(u64, usize, u32)> =
                first.iter().enumerate().map(|(g, &p)| (hashes[p], p, g as u32)).collect();
            groups.sort_unstable();
            let mut dense = vec![0u32; groups.len()];
            for (r, &(_, _, g)) in groups.iter().enumerate() {
                dense[g as usize] = r as u32;
            }
            lex.into_iter().map(|g| dense[g as usize]).collect()
        }
    }
}

const MERSENNE61: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    let p = a as u128 * b as u128;
    let lo = (p as u64) & MERSENNE61;
    let hi = (p >> 61) as u64;
    let s = lo + hi;
    if s >= MERSENNE61 {
        s - MERSENNE61
    } else {
        s
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Karp–Rabin fingerprints modulo 2^61-1 of every k-mer, with a base
/// derived from `seed`, scrambled so that the order looks random.
fn rolling_hashes(t: &[u8], k: usize, seed: u64) -> Vec<u64> {
    let base = splitmix64(seed) % (MERSENNE61 - 256) + 256;
    let mut top = 1u64;
    for _ in 1..k {
        top = mul_mod(top, base);
    }
    let mut out = Vec::with_capacity(t.len() - k + 1);
    let mut h = 0u64;
    for (i, &c) in t.iter().enumerate() {
        if i >= k {
            let drop = mul_mod(t[i - k] as u64 + 1, top);
            h = (h + MERSENNE61 - drop) % MERSENNE61;
        }
        h = (mul_mod(h, base) + c as u64 + 1) % MERSENNE61;
        if i + 1 >= k {
            out.push(splitmix64(h ^ seed));
        }
    }
    out
}

/// Standard `(w,k)`-minimizers: for each window of `w` consecutive k-mers,
/// every position holding a minimal k-mer under `order`.
///
/// Ranks come from the suffix array (lexicographic) or a seeded rolling
/// hash; window minima are maintained with a monotone deque.
pub fn minimizers_std(t: &[u8], w: usize, k: usize, order: Order) -> Result<Sample> {
    check(t.len(), w, k)?;
    let rank = ranks(t, k, order);
    let mut first = vec![usize::MAX; t.len()];
    let mut dq: VecDeque<usize> = VecDeque::with_capacity(w + 1);
    // leading elements of `dq` (all tied with the front) already reported
    let mut reported = 0usize;
    for p in 0..rank.len() {
        while dq.back().is_some_and(|&b| rank[b] > rank[p]) {
            dq.pop_back();
        }
        reported = reported.min(dq.len());
        dq.push_back(p);
        if p + 1 < w {
            continue;
        }
        let win = p + 1 - w;
        while dq.front().is_some_and(|&f| f < win) {
            dq.pop_front();
            reported = reported.saturating_sub(1);
        }
        let best = rank[dq[0]];
        while reported < dq.len() && rank[dq[reported]] == best {
            let q = dq[reported];
            if first[q] == usize::MAX {
                first[q] = win;
            }
            reported += 1;
        }
    }
    Ok(Sample::from_first_windows(&first, SchemeParams::minimizers(Scheme::MinStd, w, k, order)))
}

/// Robust winnowing: one position per window, keeping the previous
/// window's choice while it is still inside and minimal, otherwise the
/// rightmost minimal position.
pub fn minimizers_win(t: &[u8], w: usize, k: usize, order: Order) -> Result<Sample> {
    check(t.len(), w, k)?;
    let rank = ranks(t, k, order);
    let mut first = vec![usize::MAX; t.len()];
    let mut dq: VecDeque<usize> = VecDeque::with_capacity(w + 1);
    let mut chosen: Option<usize> = None;
    for p in 0..rank.len() {
        // ties keep the newer element, so the front is the rightmost minimum
        while dq.back().is_some_and(|&b| rank[b] >= rank[p]) {
            dq.pop_back();
        }
        dq.push_back(p);
        if p + 1 < w {
            continue;
        }
        let win = p + 1 - w;
        while dq.front().is_some_and(|&f| f < win) {
            dq.pop_front();
        }
        let front = dq[0];
        let pick = match chosen {
            Some(c) if c >= win && rank[c] == rank[front] => c,
            _ => front,
        };
        chosen = Some(pick);
        if first[pick] == usize::MAX {
            first[pick] = win;
        }
    }
    Ok(Sample::from_first_windows(&first, SchemeParams::minimizers(Scheme::MinWin, w, k, order)))
}
