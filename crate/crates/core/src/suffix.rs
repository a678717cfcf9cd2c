//! Suffix array (SA-IS induced sorting), rank array, S/L suffix types, a
//! sparse-table range-maximum index, and Lyndon suffix array extraction.
//!
//! A suffix is Lyndon iff it is smaller than every suffix starting to its
//! right, i.e. iff its rank is below every later rank. Walking the suffix
//! array with shrinking prefix ranges and taking the maximum start position
//! each time, or scanning the rank array right to left, both list exactly
//! those suffixes.

use crate::error::{Error, Result};

/// Start positions of the suffixes in increasing lexicographic order,
/// stored as `u32` (texts are limited to `2^31 - 1` bytes).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SuffixArray {
    order: Vec<u32>,
}

impl From<Vec<usize>> for SuffixArray {
    /// Panics if a position does not fit in `u32`.
    fn from(order: Vec<usize>) -> Self {
        let order = order
            .into_iter()
            .map(|p| u32::try_from(p).expect("suffix position exceeds u32"))
            .collect();
        SuffixArray { order }
    }
}

impl SuffixArray {
    pub fn order(&self) -> &[u32] {
        &self.order
    }

    /// Start of the `k`-th smallest suffix.
    pub fn position(&self, k: usize) -> usize {
        self.order[k] as usize
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn rank_array(&self) -> RankArray {
        let mut rank = vec![0; self.order.len()];
        for (k, &p) in self.order.iter().enumerate() {
            if let Some(&ahead) = self.order.get(k + PREFETCH_DISTANCE) {
                prefetch_read(&rank[ahead as usize]);
            }
            rank[p as usize] = k as u32;
        }
        RankArray { rank }
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.order.into_iter().map(|p| p as usize).collect()
    }
}

/// Inverse permutation of a [`SuffixArray`]. Ranks are stored as `u32`,
/// which covers every text [`suffix_array`] accepts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RankArray {
    rank: Vec<u32>,
}

impl RankArray {
    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    pub fn rank(&self, position: usize) -> usize {
        self.rank[position] as usize
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuffixType {
    S,
    L,
}

/// `types[i] == S` iff suffix `i` is smaller than suffix `i + 1`. The last
/// suffix is stored as `S`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SuffixTypeArray {
    types: Vec<SuffixType>,
}

impl SuffixTypeArray {
    pub fn types(&self) -> &[SuffixType] {
        &self.types
    }
}

/// One right-to-left pass. Equal neighbouring symbols inherit the type of the
/// successor; the last suffix inherits as `L` (it is larger than the empty
/// suffix) but is reported as `S`.
pub fn suffix_types(t: &[u8]) -> SuffixTypeArray {
    let n = t.len();
    let mut types = vec![SuffixType::S; n];
    let mut next_is_s = false;
    for i in (0..n.saturating_sub(1)).rev() {
        let s = t[i] < t[i + 1] || (t[i] == t[i + 1] && next_is_s);
        types[i] = if s { SuffixType::S } else { SuffixType::L };
        next_is_s = s;
    }
    SuffixTypeArray { types }
}

const EMPTY: u32 = u32::MAX;

/// Suffix array in O(n) time by induced sorting. Texts must be shorter than
/// `2^31 - 1` bytes.
pub fn suffix_array(t: &[u8]) -> SuffixArray {
    if t.is_empty() {
        return SuffixArray::default();
    }
    assert!(
        t.len() < (u32::MAX >> 1) as usize,
        "text too long for 31-bit suffix indices"
    );
    // Relabel the symbols that occur as 1..=k so the sentinel 0 is unique.
    let mut present = [false; 256];
    for &c in t {
        present[c as usize] = true;
    }
    let mut label = [0u16; 256];
    let mut k = 0;
    for c in 0..256 {
        if present[c] {
            k += 1;
            label[c] = k;
        }
    }
    let alphabet = k as usize + 1;
    let sa = if alphabet <= 128 {
        let s: Vec<u8> = t
            .iter()
            .map(|&c| label[c as usize] as u8)
            .chain([0])
            .collect();
        sais(s, alphabet)
    } else {
        let s: Vec<u16> = t.iter().map(|&c| label[c as usize]).chain([0]).collect();
        sais(s, alphabet)
    };
    // sa[0] is the sentinel.
    let mut order = sa;
    order.remove(0);
    SuffixArray { order }
}

fn bucket_heads(sizes: &[u32]) -> Vec<u32> {
    let mut acc = 0;
    sizes
        .iter()
        .map(|&c| {
            let h = acc;
            acc += c;
            h
        })
        .collect()
}

fn bucket_tails(sizes: &[u32]) -> Vec<u32> {
    let mut acc = 0;
    sizes
        .iter()
        .map(|&c| {
            acc += c;
            acc
        })
        .collect()
}

/// SA-IS input symbols. The top bit of each symbol is reserved for its suffix
/// type, so the induction passes, which read the text at random positions,
/// touch one narrow array.
trait Symbol: Copy + Eq {
    fn symbol(self) -> usize;
    fn is_s(self) -> bool;
    fn mark_s(self) -> Self;
}

macro_rules! packed_symbol {
    ($t:ty) => {
        impl Symbol for $t {
            fn symbol(self) -> usize {
                (self & !(1 << (<$t>::BITS - 1))) as usize
            }
            fn is_s(self) -> bool {
                self >> (<$t>::BITS - 1) != 0
            }
            fn mark_s(self) -> Self {
                self | 1 << (<$t>::BITS - 1)
            }
        }
    };
}

packed_symbol!(u8);
packed_symbol!(u16);
packed_symbol!(u32);

/// How many suffix array slots ahead random accesses are prefetched.
const PREFETCH_DISTANCE: usize = 16;

#[inline(always)]
fn prefetch_read<T>(x: &T) {
    #[cfg(target_arch = "x86_64")]
    // SAFETY: prefetching has no architectural effect; `x` is a valid reference.
    unsafe {
        use std::arch::x86_64::{_mm_prefetch, _MM_HINT_T0};
        _mm_prefetch::<_MM_HINT_T0>(x as *const T as *const i8);
    }
    #[cfg(not(target_arch = "x86_64"))]
    let _ = x;
}

/// SA-IS over `s`, whose last symbol must be a unique minimum `0`; all
/// symbols are `< alphabet` and leave the top bit clear.
fn sais<T: Symbol>(mut s: Vec<T>, alphabet: usize) -> Vec<u32> {
    let n = s.len();
    if n == 1 {
        return vec![0];
    }

    s[n - 1] = s[n - 1].mark_s();
    for i in (0..n - 1).rev() {
        let (c, next) = (s[i].symbol(), s[i + 1]);
        if c < next.symbol() || (c == next.symbol() && next.is_s()) {
            s[i] = s[i].mark_s();
        }
    }
    let s = s;
    let is_lms = |i: usize| i > 0 && s[i].is_s() && !s[i - 1].is_s();

    let mut bucket_sizes = vec![0u32; alphabet];
    for &c in &s {
        bucket_sizes[c.symbol()] += 1;
    }

    // Requests the symbol preceding the suffix at `sa[i]` ahead of its use.
    let prefetch = |sa: &[u32], i: usize| {
        if let Some(&k) = sa.get(i) {
            if k != EMPTY && k > 0 {
                prefetch_read(&s[k as usize - 1]);
            }
        }
    };

    let induce = |sa: &mut [u32]| {
        let mut head = bucket_heads(&bucket_sizes);
        for i in 0..n {
            prefetch(sa, i + PREFETCH_DISTANCE);
            let j = sa[i];
            if j != EMPTY && j > 0 {
                let prev = s[j as usize - 1];
                if !prev.is_s() {
                    let c = prev.symbol();
                    sa[head[c] as usize] = j - 1;
                    head[c] += 1;
                }
            }
        }
        let mut tail = bucket_tails(&bucket_sizes);
        for i in (0..n).rev() {
            if let Some(ahead) = i.checked_sub(PREFETCH_DISTANCE) {
                prefetch(sa, ahead);
            }
            let j = sa[i];
            if j != EMPTY && j > 0 {
                let prev = s[j as usize - 1];
                if prev.is_s() {
                    let c = prev.symbol();
                    tail[c] -= 1;
                    sa[tail[c] as usize] = j - 1;
                }
            }
        }
    };

    // Stage 1: sort LMS substrings.
    let lms: Vec<u32> = (1..n).filter(|&i| is_lms(i)).map(|i| i as u32).collect();
    let mut sa = vec![EMPTY; n];
    let mut tail = bucket_tails(&bucket_sizes);
    for &p in lms.iter().rev() {
        let c = s[p as usize].symbol();
        tail[c] -= 1;
        sa[tail[c] as usize] = p;
    }
    induce(&mut sa);

    // Name LMS substrings in sorted order. Packed symbols compare symbol and
    // type together.
    let lms_equal = |a: usize, b: usize| -> bool {
        if a == n - 1 || b == n - 1 {
            return a == b;
        }
        let mut i = 0;
        loop {
            let (x, y) = (a + i, b + i);
            if s[x] != s[y] {
                return false;
            }
            if i > 0 {
                let (lx, ly) = (is_lms(x), is_lms(y));
                if lx || ly {
                    return lx && ly;
                }
            }
            i += 1;
        }
    };
    // Compact the sorted LMS positions into the front of `sa` and use the
    // rest for names; LMS positions are never adjacent, so there are at most
    // n / 2 of them and `p / 2` is a collision-free slot.
    let mut count = 0;
    for i in 0..n {
        let p = sa[i];
        if is_lms(p as usize) {
            sa[count] = p;
            count += 1;
        }
    }
    let (sorted, names) = sa.split_at_mut(count);
    names.fill(EMPTY);
    let mut name = 0u32;
    for k in 0..count {
        let p = sorted[k] as usize;
        if k > 0 && !lms_equal(sorted[k - 1] as usize, p) {
            name += 1;
        }
        names[p / 2] = name;
    }
    let distinct = name as usize + 1;
    let reduced: Vec<u32> = names.iter().copied().filter(|&x| x != EMPTY).collect();
    debug_assert_eq!(reduced.len(), lms.len());

    // Stage 2: order the LMS suffixes, recursing if names collide.
    let reduced_sa = if distinct < reduced.len() {
        sais(reduced, distinct)
    } else {
        let mut direct = vec![0u32; reduced.len()];
        for (i, &c) in reduced.iter().enumerate() {
            direct[c as usize] = i as u32;
        }
        direct
    };

    // Stage 3: induce the full order from the sorted LMS suffixes.
    sa.fill(EMPTY);
    let mut tail = bucket_tails(&bucket_sizes);
    for &r in reduced_sa.iter().rev() {
        let p = lms[r as usize];
        let c = s[p as usize].symbol();
        tail[c] -= 1;
        sa[tail[c] as usize] = p;
    }
    induce(&mut sa);
    sa
}

/// Sparse table answering "maximum value and its index" over `values[lo..hi)`
/// in O(1) after O(n log n) preprocessing.
#[derive(Debug, Clone)]
pub struct RangeMaxIndex {
    values: Vec<usize>,
    // levels[k][i]: argmax over [i, i + 2^k)
    levels: Vec<Vec<usize>>,
}

impl RangeMaxIndex {
    pub fn new(values: &[usize]) -> Self {
        let n = values.len();
        let mut levels = vec![(0..n).collect::<Vec<_>>()];
        let mut width = 1;
        while 2 * width <= n {
            let prev = levels.last().unwrap();
            let level = (0..=n - 2 * width)
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + width]);
                    if values[b] > values[a] {
                        b
                    } else {
                        a
                    }
                })
                .collect();
            levels.push(level);
            width *= 2;
        }
        RangeMaxIndex {
            values: values.to_vec(),
            levels,
        }
    }

    pub fn for_suffix_array(sa: &SuffixArray) -> Self {
        let order: Vec<usize> = sa.order().iter().map(|&p| p as usize).collect();
        Self::new(&order)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `(max, argmax)` over `values[lo..hi)`. Ties go to the leftmost index.
    pub fn query(&self, lo: usize, hi: usize) -> Result<(usize, usize)> {
        if lo >= hi || hi > self.values.len() {
            return Err(Error::Range {
                what: "query range end",
                value: hi,
                expected: format!("lo < hi <= {} with lo = {}", self.values.len(), lo),
            });
        }
        let k = (hi - lo).ilog2() as usize;
        let level = &self.levels[k];
        let (a, b) = (level[lo], level[hi - (1 << k)]);
        let idx = if self.values[b] > self.values[a] {
            b
        } else {
            a
        };
        Ok((self.values[idx], idx))
    }
}

pub fn range_max(idx: &RangeMaxIndex, lo: usize, hi: usize) -> Result<(usize, usize)> {
    idx.query(lo, hi)
}

/// Start positions of the Lyndon suffixes, in lexicographic order (which is
/// also increasing position order).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LyndonSuffixArray {
    positions: Vec<usize>,
}

impl LyndonSuffixArray {
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Positions followed by `-1` up to length `n`.
    pub fn padded(&self, n: usize) -> Vec<i64> {
        let mut out: Vec<i64> = self.positions.iter().map(|&p| p as i64).collect();
        out.resize(n.max(out.len()), -1);
        out
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.positions
    }
}

impl From<Vec<usize>> for LyndonSuffixArray {
    fn from(positions: Vec<usize>) -> Self {
        LyndonSuffixArray { positions }
    }
}

/// Repeated range-maximum queries over shrinking prefixes of the suffix
/// array: the maximum start position in `order[0..hi)` is a Lyndon suffix,
/// and the next one lies strictly to its left in the array.
pub fn lyndon_suffix_array_rmq(t: &[u8]) -> LyndonSuffixArray {
    lyndon_suffix_array_rmq_from(&suffix_array(t))
}

pub fn lyndon_suffix_array_rmq_from(sa: &SuffixArray) -> LyndonSuffixArray {
    let idx = RangeMaxIndex::for_suffix_array(sa);
    let mut positions = Vec::new();
    let mut hi = sa.len();
    while hi > 0 {
        let (max, at) = idx.query(0, hi).expect("nonempty prefix range");
        positions.push(max);
        hi = at;
    }
    positions.reverse();
    LyndonSuffixArray { positions }
}

/// Right-to-left scan keeping the minimum rank seen so far.
pub fn lyndon_suffix_array_scan(t: &[u8]) -> LyndonSuffixArray {
    lyndon_suffix_array_scan_from(&suffix_array(t).rank_array())
}

pub fn lyndon_suffix_array_scan_from(rank: &RankArray) -> LyndonSuffixArray {
    let mut positions = Vec::new();
    let mut min_rank = u32::MAX;
    for (j, &r) in rank.ranks().iter().enumerate().rev() {
        if r < min_rank {
            positions.push(j);
            min_rank = r;
        }
    }
    positions.reverse();
    LyndonSuffixArray { positions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use proptest::prelude::*;
    use SuffixType::{L, S};

    const EXAMPLE: &[u8] = b"abaabaaabbaabaab";
    const EXAMPLE_SA: [usize; 16] = [5, 13, 2, 10, 6, 14, 3, 11, 0, 7, 15, 4, 12, 1, 9, 8];

    #[test]
    fn symbol_width_boundaries() {
        // 126, 127 and 128 distinct bytes straddle the switch to 16-bit
        // symbols; 256 distinct bytes is the widest case.
        for distinct in [126usize, 127, 128, 256] {
            let t: Vec<u8> = (0..2000usize)
                .map(|i| (255 - (i * 7919) % distinct) as u8)
                .collect();
            assert!((0..distinct).all(|c| t.contains(&((255 - c) as u8))));
            assert_eq!(
                suffix_array(&t),
                oracle::oracle_suffix_array(&t),
                "{distinct}"
            );
        }
    }

    #[test]
    fn suffix_array_examples() {
        assert_eq!(suffix_array(EXAMPLE).into_vec(), EXAMPLE_SA);
        assert_eq!(suffix_array(b"aaa").order(), &[2, 1, 0]);
        assert_eq!(suffix_array(b"ba").order(), &[1, 0]);
        assert!(suffix_array(b"").is_empty());
        assert_eq!(suffix_array(b"\0\0\xff").order(), &[0, 1, 2]);
    }

    #[test]
    fn type_examples() {
        assert_eq!(suffix_types(b"ba").types(), &[L, S]);
        assert_eq!(suffix_types(b"ab").types(), &[S, S]);
        assert_eq!(suffix_types(b"aba").types(), &[S, L, S]);
        assert_eq!(suffix_types(b"aa").types(), &[L, S]);
    }

    #[test]
    fn types_match_pairwise_comparison() {
        for n in 1..=10usize {
            for bits in 0..(1u32 << n) {
                let t: Vec<u8> = (0..n).map(|i| b'a' + ((bits >> i) & 1) as u8).collect();
                let types = suffix_types(&t);
                for i in 0..n - 1 {
                    let smaller = t[i..] < t[i + 1..];
                    assert_eq!(types.types()[i] == S, smaller, "{t:?} at {i}");
                }
            }
        }
    }

    #[test]
    fn lsa_examples() {
        assert_eq!(
            lyndon_suffix_array_rmq(EXAMPLE).positions(),
            &[5, 13, 14, 15]
        );
        assert_eq!(lyndon_suffix_array_rmq(b"aaa").positions(), &[2]);
        assert_eq!(lyndon_suffix_array_rmq(b"ab").positions(), &[0, 1]);
        assert_eq!(
            lyndon_suffix_array_scan(EXAMPLE).positions(),
            &[5, 13, 14, 15]
        );
        assert_eq!(lyndon_suffix_array_scan(b"ba").positions(), &[1]);
        assert_eq!(lyndon_suffix_array_scan(b"aab").positions(), &[0, 1, 2]);
        assert_eq!(
            lyndon_suffix_array_scan(EXAMPLE).padded(16),
            [5, 13, 14, 15, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1]
        );
    }

    #[test]
    fn range_max_examples() {
        let idx = RangeMaxIndex::new(&EXAMPLE_SA);
        assert_eq!(range_max(&idx, 0, 16), Ok((15, 10)));
        assert_eq!(range_max(&idx, 0, 1), Ok((5, 0)));
        let idx = RangeMaxIndex::new(&[1, 0]);
        assert_eq!(range_max(&idx, 0, 2), Ok((1, 0)));
        assert!(range_max(&idx, 1, 1).is_err());
        assert!(range_max(&idx, 0, 3).is_err());
    }

    #[test]
    fn exhaustive_binary() {
        for n in 1..=12usize {
            for bits in 0..(1u32 << n) {
                let t: Vec<u8> = (0..n).map(|i| b'a' + ((bits >> i) & 1) as u8).collect();
                let sa = suffix_array(&t);
                assert_eq!(sa, oracle::oracle_suffix_array(&t), "{t:?}");
                let lsa = oracle::oracle_lsa(&t);
                assert_eq!(lyndon_suffix_array_rmq(&t), lsa);
                assert_eq!(lyndon_suffix_array_scan(&t), lsa);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn range_max_matches_linear_scan(
            values in proptest::collection::vec(0usize..1000, 1..200),
            a in 0usize..200,
            b in 0usize..200,
        ) {
            let n = values.len();
            let (lo, hi) = (a.min(b) % n, (a.max(b) % n) + 1);
            prop_assume!(lo < hi);
            let idx = RangeMaxIndex::new(&values);
            let (max, at) = idx.query(lo, hi).unwrap();
            let expected = *values[lo..hi].iter().max().unwrap();
            prop_assert_eq!(max, expected);
            prop_assert_eq!(values[at], expected);
            prop_assert!(lo <= at && at < hi);
        }

        #[test]
        fn random_bytes_match_oracle(t in proptest::collection::vec(any::<u8>(), 1..300)) {
            let sa = suffix_array(&t);
            prop_assert_eq!(&sa, &oracle::oracle_suffix_array(&t));
            let rank = sa.rank_array();
            for (k, &p) in sa.order().iter().enumerate() {
                prop_assert_eq!(rank.rank(p as usize), k);
            }
            prop_assert_eq!(lyndon_suffix_array_scan(&t), lyndon_suffix_array_rmq(&t));
        }
    }
}
