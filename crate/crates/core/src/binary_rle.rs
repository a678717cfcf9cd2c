//! Binary-alphabet fast path over the run-length encoding.
//!
//! A binary word `a^p0 b^q0 a^p1 b^q1 ... a^pm b^qm` (with `a < b`) that starts
//! with `a` and ends with `b` is compared with another such word run pair by run
//! pair: a longer `a`-run is smaller, and on equal `a`-runs a shorter `b`-run is
//! smaller. Lyndon-ness and the CFL factorization of the word are therefore
//! those of its sequence of `(p, q)` pairs under that order.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::lyndon::{duval_by, is_lyndon_by, Factorization, PsiArray, Span};

/// Maximal runs `(symbol, count)`; adjacent runs have distinct symbols.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RleRuns {
    runs: Vec<(u8, usize)>,
}

impl RleRuns {
    pub fn runs(&self) -> &[(u8, usize)] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn expand(&self) -> Vec<u8> {
        let total = self.runs.iter().map(|&(_, c)| c).sum();
        let mut out = Vec::with_capacity(total);
        for &(sym, count) in &self.runs {
            out.extend(std::iter::repeat_n(sym, count));
        }
        out
    }

    fn low_symbol(&self) -> Option<u8> {
        self.runs.iter().map(|&(s, _)| s).min()
    }

    /// Splits the exponents into the `a`-run and `b`-run subsequences. With a
    /// single distinct symbol, that symbol counts as `a`.
    pub fn project(&self) -> ProjectedEncoding {
        let low = self.low_symbol();
        let (a, b): (Vec<_>, Vec<_>) = self.runs.iter().partition(|&&(s, _)| Some(s) == low);
        ProjectedEncoding {
            a_exponents: a.into_iter().map(|(_, c)| c).collect(),
            b_exponents: b.into_iter().map(|(_, c)| c).collect(),
        }
    }
}

impl std::fmt::Display for RleRuns {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &(sym, count) in &self.runs {
            write!(f, "({})^{}", sym as char, count)?;
        }
        Ok(())
    }
}

/// Run counts in run order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExponentList(pub Vec<usize>);

impl ExponentList {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProjectedEncoding {
    pub a_exponents: Vec<usize>,
    pub b_exponents: Vec<usize>,
}

/// Returns `(low, high)` symbols of a text with at most two distinct symbols.
fn binary_alphabet(t: &[u8]) -> Result<Option<(u8, u8)>> {
    let Some(&first) = t.first() else {
        return Ok(None);
    };
    let mut other = None;
    for &c in t {
        if c == first {
            continue;
        }
        match other {
            None => other = Some(c),
            Some(o) if o == c => {}
            Some(_) => {
                let mut seen = [false; 256];
                t.iter().for_each(|&c| seen[c as usize] = true);
                let distinct = seen.iter().filter(|&&s| s).count();
                return Err(Error::Alphabet { distinct });
            }
        }
    }
    let other = other.unwrap_or(first);
    Ok(Some((first.min(other), first.max(other))))
}

/// Maximal-run encoding of a text over at most two symbols.
pub fn rle(t: &[u8]) -> Result<RleRuns> {
    binary_alphabet(t)?;
    let mut runs: Vec<(u8, usize)> = Vec::new();
    for &c in t {
        match runs.last_mut() {
            Some((s, count)) if *s == c => *count += 1,
            _ => runs.push((c, 1)),
        }
    }
    Ok(RleRuns { runs })
}

pub fn exponent_list(r: &RleRuns) -> ExponentList {
    ExponentList(r.runs.iter().map(|&(_, c)| c).collect())
}

/// Order on `(a-run, b-run)` pairs: longer `a`-run first, then shorter `b`-run.
fn pair_cmp(x: &(usize, usize), y: &(usize, usize)) -> Ordering {
    y.0.cmp(&x.0).then(x.1.cmp(&y.1))
}

/// Pairs up the runs of a word that starts with `low` and ends with `high`,
/// returning the pairs and their start positions.
fn run_pairs(runs: &[(u8, usize)], start: usize) -> (Vec<(usize, usize)>, Vec<usize>) {
    debug_assert!(runs.len().is_multiple_of(2));
    let mut pairs = Vec::with_capacity(runs.len() / 2);
    let mut starts = Vec::with_capacity(runs.len() / 2);
    let mut pos = start;
    for chunk in runs.chunks_exact(2) {
        starts.push(pos);
        pairs.push((chunk[0].1, chunk[1].1));
        pos += chunk[0].1 + chunk[1].1;
    }
    (pairs, starts)
}

/// Lyndon test for binary words through the run-length encoding.
pub fn binary_is_lyndon(t: &[u8]) -> Result<bool> {
    let Some((low, high)) = binary_alphabet(t)? else {
        return Ok(false);
    };
    let n = t.len();
    if n == 1 {
        return Ok(true);
    }
    if low == high || t[0] != low || t[n - 1] != high {
        return Ok(false);
    }
    let runs = rle(t)?;
    let (pairs, _) = run_pairs(runs.runs(), 0);
    Ok(is_lyndon_by(&pairs, pair_cmp))
}

/// Per-prefix Lyndon indicator for binary words, one pass over the runs.
///
/// A Duval scan over completed run pairs gives, for each new pair index, the
/// pair `k` the next pair must beat. A prefix ending `c` symbols into a
/// `b`-run is Lyndon iff `(p, c)` beats pair `k`, so each position costs O(1).
pub fn binary_psi(t: &[u8]) -> Result<PsiArray> {
    let Some((low, high)) = binary_alphabet(t)? else {
        return Ok(PsiArray::default());
    };
    let n = t.len();
    let mut flags = vec![false; n];
    flags[0] = true;
    if low == high || t[0] != low {
        return Ok(flags.into());
    }

    let runs = rle(t)?;
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(runs.len() / 2 + 1);
    let mut k = 0usize;
    let mut alive = true;
    let mut pos = 0usize;
    for chunk in runs.runs().chunks(2) {
        let p = chunk[0].1;
        pos += p;
        let Some(&(_, q)) = chunk.get(1) else {
            break;
        };
        if alive {
            for c in 1..=q {
                flags[pos + c - 1] = match pairs.get(k) {
                    None => true,
                    Some(&(pk, qk)) => p < pk || (p == pk && c > qk),
                };
            }
            if !pairs.is_empty() {
                match pair_cmp(&pairs[k], &(p, q)) {
                    Ordering::Less => k = 0,
                    Ordering::Equal => k += 1,
                    Ordering::Greater => alive = false,
                }
            }
        }
        pairs.push((p, q));
        pos += q;
    }
    Ok(flags.into())
}

/// CFL factorization of a binary word via Duval over run pairs. Leading
/// `high` runs and a trailing `low` run split into single-letter factors.
pub fn binary_cfl(t: &[u8]) -> Result<Factorization> {
    let Some((low, high)) = binary_alphabet(t)? else {
        return Ok(Factorization::default());
    };
    let n = t.len();
    let unit = |start: usize, len: usize| (start..start + len).map(|i| Span { start: i, len: 1 });
    if low == high {
        return Ok(unit(0, n).collect::<Vec<_>>().into());
    }

    let runs = rle(t)?;
    let mut body = runs.runs();
    let mut spans = Vec::new();
    let mut head = 0;
    if body[0].0 == high {
        head = body[0].1;
        spans.extend(unit(0, head));
        body = &body[1..];
    }
    let mut tail = None;
    if let Some(&(sym, count)) = body.last() {
        if sym == low {
            tail = Some((n - count, count));
            body = &body[..body.len() - 1];
        }
    }

    let (pairs, starts) = run_pairs(body, head);
    let body_end = tail.map_or(n, |(s, _)| s);
    for s in duval_by(&pairs, pair_cmp) {
        let start = starts[s.start];
        let end = starts.get(s.end()).copied().unwrap_or(body_end);
        spans.push(Span {
            start,
            len: end - start,
        });
    }
    if let Some((s, count)) = tail {
        spans.extend(unit(s, count));
    }
    Ok(spans.into())
}

/// Decides Lyndon-ness from the run shape alone when that is possible: a
/// single `a^p b^q` pair is Lyndon, and so is any word whose first `a`-run is
/// strictly longer than every later one. Returns `None` when the shape does
/// not decide, or the word is a letter or does not start with `a` and end
/// with `b`.
pub fn run_shape_certificate(runs: &RleRuns) -> Option<bool> {
    let r = runs.runs();
    let total: usize = r.iter().map(|&(_, c)| c).sum();
    if total < 2 {
        return None;
    }
    if r.len() == 1 {
        return Some(false);
    }
    let low = runs.low_symbol()?;
    if r[0].0 != low || r[r.len() - 1].0 == low {
        return None;
    }
    let first = r[0].1;
    let later_max = r.iter().skip(2).step_by(2).map(|&(_, c)| c).max();
    match later_max {
        None => Some(true),
        Some(m) if first > m => Some(true),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon::{cfl_factorize, psi_array};
    use crate::oracle;

    const EXAMPLE: &[u8] = b"abaabaaabbaabaab";

    fn binary(n: usize, bits: u32) -> Vec<u8> {
        (0..n).map(|i| b'a' + ((bits >> i) & 1) as u8).collect()
    }

    #[test]
    fn rle_examples() {
        let r = rle(EXAMPLE).unwrap();
        assert_eq!(
            r.to_string(),
            "(a)^1(b)^1(a)^2(b)^1(a)^3(b)^2(a)^2(b)^1(a)^2(b)^1"
        );
        assert_eq!(
            exponent_list(&r).as_slice(),
            &[1, 1, 2, 1, 3, 2, 2, 1, 2, 1]
        );
        let r = rle(b"aaaa").unwrap();
        assert_eq!(r.runs(), &[(b'a', 4)]);
        assert_eq!(exponent_list(&r).as_slice(), &[4]);
        let r = rle(b"ab").unwrap();
        assert_eq!(r.runs(), &[(b'a', 1), (b'b', 1)]);
        assert_eq!(exponent_list(&r).as_slice(), &[1, 1]);
        assert_eq!(rle(b"abc"), Err(Error::Alphabet { distinct: 3 }));
        assert!(rle(b"").unwrap().is_empty());
    }

    #[test]
    fn projection_interleaves() {
        let p = rle(EXAMPLE).unwrap().project();
        assert_eq!(p.a_exponents, [1, 2, 3, 2, 2]);
        assert_eq!(p.b_exponents, [1, 1, 2, 1, 1]);
    }

    #[test]
    fn lyndon_examples() {
        assert_eq!(binary_is_lyndon(b"aabab"), Ok(true));
        assert_eq!(binary_is_lyndon(b"aabaabb"), Ok(true));
        assert_eq!(binary_is_lyndon(b"abab"), Ok(false));
        assert_eq!(binary_is_lyndon(b"ba"), Ok(false));
        assert_eq!(binary_is_lyndon(b"b"), Ok(true));
        assert!(binary_is_lyndon(b"abc").is_err());
    }

    #[test]
    fn separate_projections_do_not_decide() {
        // a-runs [2,2,1] alone look Lyndon under the reversed order, yet the
        // suffix "aabab" is smaller than the word.
        assert_eq!(binary_is_lyndon(b"aabbaabab"), Ok(false));
        assert_eq!(binary_is_lyndon(b"aababaabb"), Ok(true));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(binary_psi(EXAMPLE).unwrap().lyndon_lengths(), [1, 2]);
        assert_eq!(binary_psi(b"aaab").unwrap().lyndon_lengths(), [1, 4]);
        assert_eq!(binary_psi(b"bb").unwrap().lyndon_lengths(), [1]);
        assert!(binary_psi(b"xyz").is_err());
    }

    #[test]
    fn cfl_examples() {
        let words = |t: &[u8]| -> Vec<Vec<u8>> {
            binary_cfl(t)
                .unwrap()
                .factors(t)
                .map(<[u8]>::to_vec)
                .collect()
        };
        assert_eq!(
            words(EXAMPLE),
            [b"ab".to_vec(), b"aab".to_vec(), b"aaabbaabaab".to_vec()]
        );
        assert_eq!(words(b"ba"), [b"b".to_vec(), b"a".to_vec()]);
        assert_eq!(words(b"aabaab"), [b"aab".to_vec(), b"aab".to_vec()]);
        assert_eq!(words(b"bbb").len(), 3);
    }

    #[test]
    fn exhaustive_lyndon_upto_18() {
        for n in 1..=18usize {
            for bits in 0..(1u32 << n) {
                let t = binary(n, bits);
                assert_eq!(
                    binary_is_lyndon(&t).unwrap(),
                    oracle::oracle_is_lyndon(&t),
                    "{t:?}"
                );
            }
        }
    }

    #[test]
    fn exhaustive_psi_and_cfl() {
        for n in 1..=16usize {
            for bits in 0..(1u32 << n) {
                let t = binary(n, bits);
                assert_eq!(binary_psi(&t).unwrap(), psi_array(&t), "{t:?}");
                assert_eq!(binary_cfl(&t).unwrap(), cfl_factorize(&t), "{t:?}");
            }
        }
    }

    #[test]
    fn shape_certificate_is_sound() {
        for n in 2..=14usize {
            for bits in 0..(1u32 << n) {
                let t = binary(n, bits);
                if let Some(v) = run_shape_certificate(&rle(&t).unwrap()) {
                    assert_eq!(v, oracle::oracle_is_lyndon(&t), "{t:?}");
                }
            }
        }
        assert_eq!(run_shape_certificate(&rle(b"aaabbab").unwrap()), Some(true));
        assert_eq!(run_shape_certificate(&rle(b"aabaabb").unwrap()), None);
    }

    proptest::proptest! {
        #[test]
        fn rle_expands_back(t in proptest::collection::vec(proptest::sample::select(vec![b'0', b'1']), 0..2000)) {
            let r = rle(&t).unwrap();
            proptest::prop_assert_eq!(r.expand(), t);
            for w in r.runs().windows(2) {
                proptest::prop_assert_ne!(w[0].0, w[1].0);
            }
        }
    }
}
