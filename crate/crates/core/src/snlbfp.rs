//! Shortest prefix that is border-free but not a Lyndon word.
//!
//! Its length `r` splits the border-free prefixes: those shorter than `r` are
//! Lyndon, those of length `>= r` are not. The Lyndon border array uses this as
//! an O(1) Lyndon test for border-free prefixes.

use crate::borders::{border_array, BorderArray};
use crate::lyndon::cfl_factorize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SnlbfpResult {
    /// Length of the shortest border-free non-Lyndon prefix, if any.
    pub prefix_len: Option<usize>,
    /// Index (into the CFL factorization) of the first factor whose leading
    /// symbol is smaller than `t[0]`.
    pub witness_factor: Option<usize>,
}

impl SnlbfpResult {
    /// `prefix_len`, or `n + 1` when absent.
    pub fn threshold(&self, n: usize) -> usize {
        self.prefix_len.unwrap_or(n + 1)
    }
}

pub fn snlbfp(t: &[u8]) -> SnlbfpResult {
    snlbfp_with(t, &border_array(t))
}

/// As [`snlbfp`], reusing an already computed border array of `t`.
pub fn snlbfp_with(t: &[u8], b: &BorderArray) -> SnlbfpResult {
    debug_assert_eq!(b.len(), t.len());
    let Some(&first) = t.first() else {
        return SnlbfpResult::default();
    };
    let factors = cfl_factorize(t);
    let spans = factors.spans();

    // Factor first letters are non-increasing; find the first one below t[0].
    let mu = spans.partition_point(|s| t[s.start] >= first);
    let witness_factor = (mu < spans.len()).then_some(mu);
    // p = longest prefix covered by factors starting with t[0].
    let p_len = spans.get(mu).map_or(t.len(), |s| s.start);

    let first_end = spans[0].len;
    let interior = (first_end + 1..=p_len).find(|&len| b.at_len(len) == 0);
    let prefix_len = interior.or_else(|| (p_len < t.len()).then_some(p_len + 1));

    SnlbfpResult {
        prefix_len,
        witness_factor,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon::is_lyndon;
    use crate::oracle;

    #[test]
    fn examples() {
        let r = snlbfp(b"abaabaaabbaabaab");
        assert_eq!(r.prefix_len, Some(10));
        assert_eq!(r.witness_factor, None);
        assert_eq!(snlbfp(b"ba").prefix_len, Some(2));
        assert_eq!(snlbfp(b"ba").witness_factor, Some(1));
        assert_eq!(snlbfp(b"abaab").prefix_len, None);
        assert_eq!(snlbfp(b"").prefix_len, None);
        assert_eq!(snlbfp(b"a").prefix_len, None);
        assert_eq!(snlbfp(b"aaa").prefix_len, None);
    }

    #[test]
    fn exhaustive_binary() {
        for n in 1..=16usize {
            for bits in 0..(1u32 << n) {
                let t: Vec<u8> = (0..n).map(|i| b'a' + ((bits >> i) & 1) as u8).collect();
                let got = snlbfp(&t).prefix_len;
                assert_eq!(got, oracle::oracle_snlbfp(&t), "{t:?}");
                if let Some(r) = got {
                    assert!(r > cfl_factorize(&t).spans()[0].len);
                }
            }
        }
    }

    #[test]
    fn threshold_splits_border_free_prefixes() {
        let t = b"abaabaaabbaabaab";
        let b = border_array(t);
        let r = snlbfp(t).threshold(t.len());
        for len in 1..=t.len() {
            if b.at_len(len) == 0 {
                assert_eq!(len < r, is_lyndon(&t[..len]));
            }
        }
    }
}
