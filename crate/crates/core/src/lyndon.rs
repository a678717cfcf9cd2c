//! Lyndon words: predicates, Chen-Fox-Lyndon factorization (Duval's method),
//! standard factorization, the per-prefix Lyndon indicator and the
//! "invalid point" predicates that rule out every right extension.

use std::cmp::Ordering;

use crate::borders::{border_array, BorderArray};
use crate::error::{Error, Result};
use crate::snlbfp::snlbfp_with;

/// A half-open range `[start, start + len)` of the text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub len: usize,
}

impl Span {
    pub fn end(&self) -> usize {
        self.start + self.len
    }

    pub fn slice<'a, T>(&self, t: &'a [T]) -> &'a [T] {
        &t[self.start..self.end()]
    }
}

/// Ordered, gap-free cover of a text by Lyndon factors, non-increasing in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    spans: Vec<Span>,
}

impl Factorization {
    pub fn spans(&self) -> &[Span] {
        &self.spans
    }

    pub fn len(&self) -> usize {
        self.spans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spans.is_empty()
    }

    pub fn factors<'a>(&'a self, t: &'a [u8]) -> impl Iterator<Item = &'a [u8]> + 'a {
        self.spans.iter().map(move |s| s.slice(t))
    }
}

impl From<Vec<Span>> for Factorization {
    fn from(spans: Vec<Span>) -> Self {
        Factorization { spans }
    }
}

/// Duval's factorization of `s` under an arbitrary total order on symbols.
pub(crate) fn duval_by<T, F>(s: &[T], mut cmp: F) -> Vec<Span>
where
    F: FnMut(&T, &T) -> Ordering,
{
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n {
            match cmp(&s[k], &s[j]) {
                Ordering::Less => k = i,
                Ordering::Equal => k += 1,
                Ordering::Greater => break,
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            out.push(Span {
                start: i,
                len: period,
            });
            i += period;
        }
    }
    out
}

/// Lyndon test under an arbitrary symbol order; one Duval scan.
pub(crate) fn is_lyndon_by<T, F>(s: &[T], mut cmp: F) -> bool
where
    F: FnMut(&T, &T) -> Ordering,
{
    let n = s.len();
    if n == 0 {
        return false;
    }
    let (mut j, mut k) = (1, 0);
    while j < n {
        match cmp(&s[k], &s[j]) {
            Ordering::Less => k = 0,
            Ordering::Equal => k += 1,
            Ordering::Greater => return false,
        }
        j += 1;
    }
    k == 0
}

/// True iff `t` is nonempty and strictly smaller than each of its proper
/// suffixes. Linear time.
pub fn is_lyndon(t: &[u8]) -> bool {
    is_lyndon_by(t, u8::cmp)
}

/// Chen-Fox-Lyndon factorization via Duval's algorithm, O(n).
pub fn cfl_factorize(t: &[u8]) -> Factorization {
    Factorization {
        spans: duval_by(t, u8::cmp),
    }
}

/// Splits a Lyndon word `t = uv` with `v` its longest proper Lyndon suffix.
///
/// The longest Lyndon suffix of any word is the last factor of its CFL
/// factorization, so `v` is the last factor of `t[1..]`.
pub fn standard_factorization(t: &[u8]) -> Result<(&[u8], &[u8])> {
    if t.len() < 2 {
        return Err(Error::Domain(format!(
            "standard factorization needs a Lyndon word of length >= 2, got length {}",
            t.len()
        )));
    }
    if !is_lyndon(t) {
        return Err(Error::Domain("input is not a Lyndon word".into()));
    }
    let tail = &t[1..];
    let last = *cfl_factorize(tail)
        .spans()
        .last()
        .expect("nonempty tail has a factor");
    let split = 1 + last.start;
    Ok(t.split_at(split))
}

/// `flags[i]` is true iff the prefix of length `i + 1` is a Lyndon word.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PsiArray {
    flags: Vec<bool>,
}

impl PsiArray {
    pub fn flags(&self) -> &[bool] {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    /// Whether the prefix of length `prefix_len` is Lyndon.
    pub fn at_len(&self, prefix_len: usize) -> bool {
        self.flags[prefix_len - 1]
    }

    /// Prefix lengths whose prefix is Lyndon, ascending.
    pub fn lyndon_lengths(&self) -> Vec<usize> {
        self.flags
            .iter()
            .enumerate()
            .filter_map(|(i, &f)| f.then_some(i + 1))
            .collect()
    }
}

impl From<Vec<bool>> for PsiArray {
    fn from(flags: Vec<bool>) -> Self {
        PsiArray { flags }
    }
}

/// Per-prefix Lyndon indicator for any alphabet.
///
/// A prefix is Lyndon iff it is border-free and shorter than the shortest
/// border-free non-Lyndon prefix.
pub fn psi_array(t: &[u8]) -> PsiArray {
    let b = border_array(t);
    let r = snlbfp_with(t, &b).prefix_len.unwrap_or(t.len() + 1);
    psi_array_from(&b, r)
}

/// Same as [`psi_array`] given the border array and the threshold `r` (the
/// shortest border-free non-Lyndon prefix length, or `n + 1` if none).
pub fn psi_array_from(b: &BorderArray, r: usize) -> PsiArray {
    let flags = b
        .values()
        .iter()
        .enumerate()
        .map(|(i, &beta)| beta == 0 && i + 1 < r)
        .collect();
    PsiArray { flags }
}

/// For a border-free `t` with `n >= 2`: true iff `t` is not Lyndon, in which
/// case no right extension of `t` is Lyndon either.
pub fn lfail_borderfree(t: &[u8]) -> Result<bool> {
    if t.len() < 2 {
        return Err(Error::Precondition(format!(
            "need length >= 2, got {}",
            t.len()
        )));
    }
    if border_array(t).at_len(t.len()) != 0 {
        return Err(Error::Precondition("text is bordered".into()));
    }
    Ok(!is_lyndon(t))
}

/// For a bordered `t` with `n >= 2`: true iff `next < t[border(t)]`, which
/// guarantees `t . next` and all its right extensions are not Lyndon.
///
/// The condition is sufficient only; `false` does not mean some extension is
/// Lyndon.
pub fn lfail_bordered(t: &[u8], next: u8) -> Result<bool> {
    if t.len() < 2 {
        return Err(Error::Precondition(format!(
            "need length >= 2, got {}",
            t.len()
        )));
    }
    let border = border_array(t).at_len(t.len());
    if border == 0 {
        return Err(Error::Precondition("text is border-free".into()));
    }
    Ok(next < t[border])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    const EXAMPLE: &[u8] = b"abaabaaabbaabaab";

    fn words(t: &[u8], f: &Factorization) -> Vec<String> {
        f.factors(t)
            .map(|w| String::from_utf8(w.to_vec()).unwrap())
            .collect()
    }

    fn all_words(alphabet: &[u8], max: usize) -> Vec<Vec<u8>> {
        let mut out = vec![];
        let mut layer: Vec<Vec<u8>> = vec![vec![]];
        for _ in 0..max {
            layer = layer
                .iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |&c| {
                        let mut v = w.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    #[test]
    fn lyndon_examples() {
        assert!(is_lyndon(b"ab"));
        assert!(!is_lyndon(b"aba"));
        assert!(is_lyndon(b"aaabbaabaab"));
        assert!(is_lyndon(b"a"));
        assert!(!is_lyndon(b"aa"));
        assert!(!is_lyndon(b""));
    }

    #[test]
    fn cfl_examples() {
        assert_eq!(
            words(EXAMPLE, &cfl_factorize(EXAMPLE)),
            ["ab", "aab", "aaabbaabaab"]
        );
        assert_eq!(words(b"aaa", &cfl_factorize(b"aaa")), ["a", "a", "a"]);
        assert_eq!(words(b"ba", &cfl_factorize(b"ba")), ["b", "a"]);
        assert!(cfl_factorize(b"").is_empty());
    }

    #[test]
    fn standard_factorization_examples() {
        assert_eq!(
            standard_factorization(b"aab").unwrap(),
            (&b"a"[..], &b"ab"[..])
        );
        assert_eq!(
            standard_factorization(b"ab").unwrap(),
            (&b"a"[..], &b"b"[..])
        );
        assert_eq!(
            standard_factorization(b"aaab").unwrap(),
            (&b"a"[..], &b"aab"[..])
        );
        assert!(matches!(
            standard_factorization(b"ba"),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            standard_factorization(b"a"),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_array(EXAMPLE).lyndon_lengths(), [1, 2]);
        assert_eq!(psi_array(b"aaab").lyndon_lengths(), [1, 4]);
        assert_eq!(psi_array(b"ba").lyndon_lengths(), [1]);
        assert!(psi_array(b"").is_empty());
    }

    #[test]
    fn lfail_examples() {
        assert_eq!(lfail_borderfree(b"ba"), Ok(true));
        assert_eq!(lfail_borderfree(b"ab"), Ok(false));
        assert_eq!(lfail_borderfree(b"abaabaaabb"), Ok(true));
        assert!(matches!(
            lfail_borderfree(b"aba"),
            Err(Error::Precondition(_))
        ));
        assert!(lfail_borderfree(b"a").is_err());

        assert_eq!(lfail_bordered(b"aba", b'a'), Ok(true));
        assert_eq!(lfail_bordered(b"aba", b'b'), Ok(false));
        assert_eq!(lfail_bordered(b"aa", b'b'), Ok(false));
        assert!(matches!(
            lfail_bordered(b"ab", b'a'),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn lfail_borderfree_blocks_extensions() {
        for t in all_words(b"ab", 10) {
            if t.len() < 2 || oracle::oracle_border_array(&t).at_len(t.len()) != 0 {
                continue;
            }
            if lfail_borderfree(&t).unwrap() {
                for ext in all_words(b"ab", 3) {
                    let mut w = t.clone();
                    w.extend_from_slice(&ext);
                    assert!(!oracle::oracle_is_lyndon(&w), "{w:?}");
                }
            }
        }
    }

    #[test]
    fn lfail_bordered_blocks_extensions() {
        for t in all_words(b"abc", 7) {
            if t.len() < 2 || oracle::oracle_border_array(&t).at_len(t.len()) == 0 {
                continue;
            }
            for next in *b"abc" {
                if lfail_bordered(&t, next).unwrap() {
                    let mut w = t.clone();
                    w.push(next);
                    for ext in all_words(b"abc", 2) {
                        let mut x = w.clone();
                        x.extend_from_slice(&ext);
                        assert!(!oracle::oracle_is_lyndon(&x));
                    }
                    assert!(!oracle::oracle_is_lyndon(&w));
                }
            }
        }
    }

    #[test]
    fn agrees_with_oracles_binary() {
        for t in all_words(b"ab", 14) {
            assert_eq!(is_lyndon(&t), oracle::oracle_is_lyndon(&t), "{t:?}");
            let f = cfl_factorize(&t);
            assert_eq!(f, oracle::oracle_cfl(&t), "{t:?}");
            for w in f.spans().windows(2) {
                assert_ne!(
                    crate::text::lex_compare(w[0].slice(&t), w[1].slice(&t)),
                    Ordering::Less
                );
            }
        }
        for t in all_words(b"ab", 16) {
            assert_eq!(psi_array(&t), oracle::oracle_psi(&t), "{t:?}");
        }
    }

    #[test]
    fn standard_factorization_matches_oracle() {
        for t in all_words(b"abc", 8) {
            if t.len() < 2 || !oracle::oracle_is_lyndon(&t) {
                continue;
            }
            let (u, v) = standard_factorization(&t).unwrap();
            let (ou, ov) = oracle::oracle_standard_factorization(&t);
            assert_eq!((u, v), (ou.as_slice(), ov.as_slice()));
            assert_eq!(crate::text::lex_compare(u, v), Ordering::Less);
            assert!(oracle::oracle_is_lyndon(u) && oracle::oracle_is_lyndon(v));
        }
    }

    #[test]
    fn duval_with_reversed_order() {
        let seq = [2usize, 1, 2, 2, 1];
        let spans = duval_by(&seq, |a, b| b.cmp(a));
        let got: Vec<&[usize]> = spans.iter().map(|s| s.slice(&seq)).collect();
        // under 2 < 1, [2,2,1] < [2,1]
        assert_eq!(got, vec![&[2, 1][..], &[2, 2, 1][..]]);
        assert!(is_lyndon_by(&[2usize, 2, 1], |a, b| b.cmp(a)));
        assert!(!is_lyndon_by(&[1usize, 2], |a, b| b.cmp(a)));
    }
}
