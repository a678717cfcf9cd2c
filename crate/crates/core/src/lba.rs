//! Lyndon border array: for every prefix, the length of its longest border
//! that is a Lyndon word (0 if there is none).
//!
//! A Lyndon border has no border of its own, so the only candidate in a
//! prefix's chain of borders is its shortest nonzero border (the penultimate
//! chain value). Both constructions below test exactly that candidate.

use crate::borders::{border_array, border_chain};
use crate::lyndon::psi_array_from;
use crate::snlbfp::snlbfp_with;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LyndonBorderArray {
    values: Vec<usize>,
}

impl LyndonBorderArray {
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.values
    }
}

impl From<Vec<usize>> for LyndonBorderArray {
    fn from(values: Vec<usize>) -> Self {
        LyndonBorderArray { values }
    }
}

/// Counters collected by [`lba_efficient_with_stats`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LbaStats {
    /// Number of border links `l -> beta(l)` followed.
    pub chain_traversals: usize,
}

/// Per-prefix chain walk; each prefix materializes its own chain.
pub fn lba_naive(t: &[u8]) -> LyndonBorderArray {
    let n = t.len();
    let b = border_array(t);
    let r = snlbfp_with(t, &b).threshold(n);
    let psi = psi_array_from(&b, r);
    let values = (1..=n)
        .map(|len| {
            let chain = border_chain(&b, len).expect("length in range");
            match chain.penultimate() {
                Some(k) if psi.at_len(k) => k,
                _ => 0,
            }
        })
        .collect();
    LyndonBorderArray { values }
}

pub fn lba_efficient(t: &[u8]) -> LyndonBorderArray {
    lba_efficient_with_stats(t).0
}

/// Marks prefix lengths whose chain has not been walked yet.
const UNRESOLVED: u32 = u32::MAX;

/// Linear-time construction: every prefix length is pushed once, and memoized
/// penultimate values cut each chain walk at the first already-resolved length.
pub fn lba_efficient_with_stats(t: &[u8]) -> (LyndonBorderArray, LbaStats) {
    let n = t.len();
    let b = border_array(t);
    let r = snlbfp_with(t, &b).threshold(n);

    assert!(n < UNRESOLVED as usize, "text too long for 32-bit lengths");
    // Penultimate chain value of each resolved prefix length, 0 when
    // border-free; slot 0 unused.
    let mut pval = vec![UNRESOLVED; n + 1];
    let mut values = vec![0usize; n];
    let mut stack = Vec::new();
    let mut stats = LbaStats::default();

    for i in (1..=n).rev() {
        if pval[i] != UNRESOLVED {
            continue;
        }
        stack.push(i);
        let mut cur = i;
        let k = loop {
            let next = b.at_len(cur);
            stats.chain_traversals += 1;
            if next == 0 {
                break if cur == i { 0 } else { cur };
            }
            match pval[next] {
                UNRESOLVED => {}
                0 => break next,
                p => break p as usize,
            }
            stack.push(next);
            cur = next;
        };

        while let Some(j) = stack.pop() {
            let own = if k < j { k } else { 0 };
            values[j - 1] = if own < r { own } else { 0 };
            pval[j] = own as u32;
        }
    }
    (LyndonBorderArray { values }, stats)
}
