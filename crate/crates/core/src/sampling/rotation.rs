use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::{Error, Result};

/// Leftmost lexicographically minimal rotation of `x`, 1-based.
///
/// Booth's algorithm, linear in `|x|`.
///
/// ```
/// use bdanchors_core::sampling::minimal_rotation;
/// assert_eq!(minimal_rotation(b"abaaa").unwrap(), 3);
/// ```
pub fn minimal_rotation(x: &[u8]) -> Result<usize> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(Rotations::default().least(x) + 1)
}

/// Leftmost minimal rotation of `x` among the starts `1..=|x|-r`, 1-based.
pub fn minimal_rotation_restricted(x: &[u8], r: usize) -> Result<usize> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    if r >= x.len() {
        return Err(Error::ReductionTooLarge { r, ell: x.len() });
    }
    Ok(Rotations::default().least_restricted(x, x.len() - r) + 1)
}

/// Reusable scratch space for repeated rotation queries over windows.
#[derive(Debug, Default)]
pub(crate) struct Rotations {
    doubled: Vec<u8>,
    failure: Vec<isize>,
}

impl Rotations {
    /// 0-based leftmost minimal rotation of a non-empty `x`.
    pub(crate) fn least(&mut self, x: &[u8]) -> usize {
        let n = x.len();
        if n == 1 {
            return 0;
        }
        self.doubled.clear();
        self.doubled.extend_from_slice(x);
        self.doubled.extend_from_slice(x);
        self.failure.clear();
        self.failure.resize(2 * n, -1);
        let s = &self.doubled;
        let f = &mut self.failure;

        let mut k = 0usize;
        for j in 1..2 * n {
            let c = s[j];
            let mut i = f[j - k - 1];
            while i != -1 && c != s[k + i as usize + 1] {
                if c < s[k + i as usize + 1] {
                    k = j - i as usize - 1;
                }
                i = f[i as usize];
            }
            // i == -1 here unless the loop stopped on a match
            if i == -1 && c != s[k] {
                if c < s[k] {
                    k = j;
                }
                f[j - k] = -1;
            } else {
                f[j - k] = i + 1;
            }
        }
        k
    }

    /// 0-based leftmost minimal rotation among starts `0..m`, `1 ≤ m ≤ |x|`.
    pub(crate) fn least_restricted(&mut self, x: &[u8], m: usize) -> usize {
        let best = self.least(x);
        if best < m {
            return best;
        }
        // The unrestricted minimum lies in the excluded tail; compare the
        // admissible rotations directly.
        let mut best = 0;
        for p in 1..m {
            if compare_rotations(x, p, best) == Ordering::Less {
                best = p;
            }
        }
        best
    }
}

fn compare_rotations(x: &[u8], a: usize, b: usize) -> Ordering {
    let n = x.len();
    let rot = |s: usize| x[s..].iter().chain(&x[..s]);
    debug_assert!(a < n && b < n);
    rot(a).cmp(rot(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::oracle_minimal_rotation;
    use proptest::prelude::*;

    #[test]
    fn worked_examples() {
        assert_eq!(minimal_rotation(b"abaaa"), Ok(3));
        assert_eq!(minimal_rotation(b"aaaa"), Ok(1));
        assert_eq!(minimal_rotation(b"cbacbacba"), Ok(3));
        assert_eq!(minimal_rotation(b""), Err(Error::EmptyInput));
        assert_eq!(minimal_rotation(b"z"), Ok(1));
    }

    #[test]
    fn exhaustive_ternary_up_to_nine() {
        let mut rot = Rotations::default();
        for len in 1..=9u32 {
            for code in 0..3usize.pow(len) {
                let x = to_word(code, len as usize, 3);
                assert_eq!(rot.least(&x) + 1, oracle_minimal_rotation(&x).unwrap(), "{x:?}");
            }
        }
    }

    #[test]
    fn restricted_matches_scan() {
        let mut rot = Rotations::default();
        for len in 1..=8u32 {
            for code in 0..3usize.pow(len) {
                let x = to_word(code, len as usize, 3);
                for m in 1..=x.len() {
                    let expect = (0..m).min_by(|&a, &b| compare_rotations(&x, a, b).then(a.cmp(&b))).unwrap();
                    assert_eq!(rot.least_restricted(&x, m), expect, "{x:?} m={m}");
                }
            }
        }
    }

    #[test]
    fn restricted_errors() {
        assert_eq!(minimal_rotation_restricted(b"abc", 3), Err(Error::ReductionTooLarge { r: 3, ell: 3 }));
        assert_eq!(minimal_rotation_restricted(b"bba", 1), Ok(2));
        assert_eq!(minimal_rotation_restricted(b"bba", 0), Ok(3));
    }

    fn to_word(mut code: usize, len: usize, sigma: usize) -> Vec<u8> {
        (0..len)
            .map(|_| {
                let c = b'a' + (code % sigma) as u8;
                code /= sigma;
                c
            })
            .collect()
    }

    fn is_primitive(x: &[u8]) -> bool {
        // x is primitive iff it occurs in xx only as prefix and suffix
        let xx = [x, x].concat();
        (1..x.len()).all(|s| &xx[s..s + x.len()] != x)
    }

    proptest! {
        #[test]
        fn primitive_strings_have_unique_minimum(x in proptest::collection::vec(b'a'..=b'c', 1..40)) {
            let n = x.len();
            let best = minimal_rotation(&x).unwrap() - 1;
            let ties = (0..n).filter(|&p| compare_rotations(&x, p, best) == Ordering::Equal).count();
            if is_primitive(&x) {
                prop_assert_eq!(ties, 1);
            } else {
                prop_assert!(ties > 1);
            }
        }

        #[test]
        fn powers_repeat_with_period(u in proptest::collection::vec(b'a'..=b'c', 1..8), m in 2usize..5) {
            prop_assume!(is_primitive(&u));
            let x = u.repeat(m);
            let best = minimal_rotation(&x).unwrap() - 1;
            prop_assert!(best < u.len());
            for p in 0..x.len() {
                let tie = compare_rotations(&x, p, best) == Ordering::Equal;
                prop_assert_eq!(tie, (p + u.len() - best % u.len()).is_multiple_of(u.len()));
            }
        }
    }
}
