//! Brute-force reference implementations, written straight from the
//! definitions. Quadratic or worse; used by tests and the `check` command.
//!
//! Nothing here calls the fast paths in the rest of the crate.

use crate::borders::BorderArray;
use crate::lba::LyndonBorderArray;
use crate::lyndon::{Factorization, PsiArray, Span};
use crate::suffix::{LyndonSuffixArray, SuffixArray};

fn is_border(w: &[u8], len: usize) -> bool {
    w[..len] == w[w.len() - len..]
}

/// Nonzero border lengths of `w`, longest first.
pub fn oracle_all_borders(w: &[u8]) -> Vec<usize> {
    (1..w.len()).rev().filter(|&l| is_border(w, l)).collect()
}

pub fn oracle_border_array(t: &[u8]) -> BorderArray {
    (1..=t.len())
        .map(|i| {
            let prefix = &t[..i];
            (1..i).rev().find(|&l| is_border(prefix, l)).unwrap_or(0)
        })
        .collect::<Vec<_>>()
        .into()
}

/// Divisor check: `t != u^k` for every proper divisor length.
pub fn oracle_is_primitive(t: &[u8]) -> bool {
    let n = t.len();
    if n == 0 {
        return false;
    }
    !(1..n)
        .filter(|d| n.is_multiple_of(*d))
        .any(|d| t.chunks(d).all(|c| c == &t[..d]))
}

fn smaller_than_all_rotations(t: &[u8]) -> bool {
    (1..t.len()).all(|k| t.iter().lt(t[k..].iter().chain(&t[..k])))
}

fn smaller_than_all_suffixes(t: &[u8]) -> bool {
    (1..t.len()).all(|k| t < &t[k..])
}

/// Lyndon test by both classical definitions, which must agree.
pub fn oracle_is_lyndon(t: &[u8]) -> bool {
    if t.is_empty() {
        return false;
    }
    let by_rotation = smaller_than_all_rotations(t) && oracle_is_primitive(t);
    let by_suffix = smaller_than_all_suffixes(t);
    assert_eq!(
        by_rotation, by_suffix,
        "Lyndon definitions disagree on {t:?}"
    );
    by_rotation
}

pub fn oracle_psi(t: &[u8]) -> PsiArray {
    (1..=t.len())
        .map(|i| oracle_is_lyndon(&t[..i]))
        .collect::<Vec<_>>()
        .into()
}

/// Repeatedly strips the longest Lyndon prefix.
pub fn oracle_cfl(t: &[u8]) -> Factorization {
    let mut spans = Vec::new();
    let mut start = 0;
    while start < t.len() {
        let rest = &t[start..];
        let len = (1..=rest.len())
            .rev()
            .find(|&l| oracle_is_lyndon(&rest[..l]))
            .expect("a single letter is Lyndon");
        spans.push(Span { start, len });
        start += len;
    }
    spans.into()
}

/// Smallest prefix length that is border-free and not Lyndon.
pub fn oracle_snlbfp(t: &[u8]) -> Option<usize> {
    (1..=t.len()).find(|&l| oracle_all_borders(&t[..l]).is_empty() && !oracle_is_lyndon(&t[..l]))
}

/// Longest Lyndon border of each prefix, found by trying every border.
pub fn oracle_lba(t: &[u8]) -> LyndonBorderArray {
    (1..=t.len())
        .map(|i| {
            let prefix = &t[..i];
            (1..i)
                .rev()
                .filter(|&l| is_border(prefix, l))
                .find(|&l| oracle_is_lyndon(&prefix[..l]))
                .unwrap_or(0)
        })
        .collect::<Vec<_>>()
        .into()
}

/// Sorts all suffixes with slice comparison.
pub fn oracle_suffix_array(t: &[u8]) -> SuffixArray {
    let mut order: Vec<usize> = (0..t.len()).collect();
    order.sort_by(|&a, &b| t[a..].cmp(&t[b..]));
    order.into()
}

/// Lyndon suffixes, sorted lexicographically.
pub fn oracle_lsa(t: &[u8]) -> LyndonSuffixArray {
    let mut positions: Vec<usize> = (0..t.len())
        .filter(|&j| oracle_is_lyndon(&t[j..]))
        .collect();
    positions.sort_by(|&a, &b| t[a..].cmp(&t[b..]));
    positions.into()
}

/// Longest proper Lyndon suffix and the prefix before it.
pub fn oracle_standard_factorization(t: &[u8]) -> (Vec<u8>, Vec<u8>) {
    let split = (1..t.len())
        .find(|&i| oracle_is_lyndon(&t[i..]))
        .expect("last letter is Lyndon");
    (t[..split].to_vec(), t[split..].to_vec())
}
