//! Border arrays (the Morris-Pratt failure function) and chains of borders.

use crate::error::{Error, Result};

/// `values[i]` is the length of the longest proper border of the prefix of
/// length `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BorderArray {
    values: Vec<usize>,
}

impl BorderArray {
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Longest border of the prefix of length `prefix_len` (1-based length).
    #[inline]
    pub fn at_len(&self, prefix_len: usize) -> usize {
        self.values[prefix_len - 1]
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.values
    }
}

impl From<Vec<usize>> for BorderArray {
    fn from(values: Vec<usize>) -> Self {
        BorderArray { values }
    }
}

/// Computes the border array in O(n).
pub fn border_array(t: &[u8]) -> BorderArray {
    let n = t.len();
    let mut values = vec![0usize; n];
    let mut k = 0usize;
    for i in 1..n {
        while k > 0 && t[i] != t[k] {
            k = values[k - 1];
        }
        if t[i] == t[k] {
            k += 1;
        }
        values[i] = k;
    }
    BorderArray { values }
}

/// The chain of border lengths of one prefix, `beta(l), beta(beta(l)), ..., 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderChain {
    lengths: Vec<usize>,
    source_prefix: usize,
}

impl BorderChain {
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn source_prefix(&self) -> usize {
        self.source_prefix
    }

    /// Shortest nonzero border of the source prefix, if it has one.
    pub fn penultimate(&self) -> Option<usize> {
        penultimate(self)
    }
}

/// Materializes the border chain of the prefix of length `prefix_len`.
pub fn border_chain(b: &BorderArray, prefix_len: usize) -> Result<BorderChain> {
    if prefix_len == 0 || prefix_len > b.len() {
        return Err(Error::Range {
            what: "prefix length",
            value: prefix_len,
            expected: format!("1..={}", b.len()),
        });
    }
    let mut lengths = Vec::new();
    let mut cur = b.at_len(prefix_len);
    lengths.push(cur);
    while cur > 0 {
        cur = b.at_len(cur);
        lengths.push(cur);
    }
    Ok(BorderChain {
        lengths,
        source_prefix: prefix_len,
    })
}

/// Last nonzero value of the chain; `None` for a border-free prefix.
pub fn penultimate(c: &BorderChain) -> Option<usize> {
    c.lengths.iter().rev().copied().find(|&l| l > 0)
}

/// True iff `t` is not of the form `u^k` with `k >= 2`. The empty string is
/// not primitive.
pub fn is_primitive(t: &[u8]) -> bool {
    let n = t.len();
    if n == 0 {
        return false;
    }
    let period = n - border_array(t).at_len(n);
    !(period < n && n.is_multiple_of(period))
}
