//! Owned text type and the lexicographic primitives shared by the other modules.
//!
//! Symbols are raw bytes ordered by their numeric value. Positions are 0-based
//! and a "prefix length" `l` denotes the first `l` symbols.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Immutable byte string over a totally ordered alphabet.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Text(Box<[u8]>);

impl Text {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Self {
        Text(bytes.into().into_boxed_slice())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn reversed(&self) -> Text {
        let mut v = self.0.to_vec();
        v.reverse();
        Text::new(v)
    }

    /// Lexicographic comparison against another text.
    pub fn lex_cmp(&self, other: &Text) -> Ordering {
        lex_compare(&self.0, &other.0)
    }

    /// The conjugate starting at offset `k`.
    pub fn rotation(&self, k: usize) -> Result<Text> {
        rotation(&self.0, k).map(Text::new)
    }
}

impl Deref for Text {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl AsRef<[u8]> for Text {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text::new(s.as_bytes())
    }
}

impl From<&[u8]> for Text {
    fn from(s: &[u8]) -> Self {
        Text::new(s)
    }
}

impl From<Vec<u8>> for Text {
    fn from(v: Vec<u8>) -> Self {
        Text::new(v)
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Text({:?})", String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Display for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

/// Standard lexicographic order: a proper prefix is smaller, otherwise the
/// first differing symbol decides.
pub fn lex_compare(a: &[u8], b: &[u8]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    a.len().cmp(&b.len())
}

/// Returns `t[k..] ++ t[..k]`. Requires `0 <= k < n`.
pub fn rotation(t: &[u8], k: usize) -> Result<Vec<u8>> {
    if k >= t.len() {
        return Err(Error::Range {
            what: "rotation offset",
            value: k,
            expected: format!("0..{}", t.len()),
        });
    }
    let mut out = Vec::with_capacity(t.len());
    out.extend_from_slice(&t[k..]);
    out.extend_from_slice(&t[..k]);
    Ok(out)
}
