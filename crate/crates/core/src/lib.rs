//! Linear-time Lyndon border arrays and Lyndon suffix arrays.
//!
//! The crate computes, for a byte string:
//!
//! - the border array ([`borders`]),
//! - the Chen-Fox-Lyndon factorization and per-prefix Lyndon flags ([`lyndon`]),
//! - the shortest border-free non-Lyndon prefix ([`snlbfp`]),
//! - the Lyndon border array, i.e. the longest Lyndon border of every prefix ([`lba`]),
//! - a run-length fast path for binary strings ([`binary_rle`]),
//! - the suffix array and the Lyndon suffix array ([`suffix`]),
//!
//! together with brute-force references for all of them ([`oracle`]).
//!
//! ```
//! use lyndon_arrays::{lba_efficient, lyndon_suffix_array_scan};
//!
//! let t = b"abaabaaabbaabaab";
//! assert_eq!(
//!     lba_efficient(t).values(),
//!     &[0, 0, 1, 1, 2, 1, 1, 1, 2, 0, 1, 1, 2, 1, 1, 2]
//! );
//! assert_eq!(lyndon_suffix_array_scan(t).positions(), &[5, 13, 14, 15]);
//! ```

pub mod bench;
pub mod binary_rle;
pub mod borders;
pub mod check;
pub mod cli;
pub mod error;
pub mod lba;
pub mod lyndon;
pub mod oracle;
pub mod snlbfp;
pub mod suffix;
pub mod text;

pub use binary_rle::{
    binary_cfl, binary_is_lyndon, binary_psi, exponent_list, rle, ExponentList, ProjectedEncoding,
    RleRuns,
};
pub use borders::{
    border_array, border_chain, is_primitive, penultimate, BorderArray, BorderChain,
};
pub use error::{Error, Result};
pub use lba::{lba_efficient, lba_efficient_with_stats, lba_naive, LbaStats, LyndonBorderArray};
pub use lyndon::{
    cfl_factorize, is_lyndon, lfail_bordered, lfail_borderfree, psi_array, standard_factorization,
    Factorization, PsiArray, Span,
};
pub use snlbfp::{snlbfp, SnlbfpResult};
pub use suffix::{
    lyndon_suffix_array_rmq, lyndon_suffix_array_scan, range_max, suffix_array, suffix_types,
    LyndonSuffixArray, RangeMaxIndex, RankArray, SuffixArray, SuffixType, SuffixTypeArray,
};
pub use text::{lex_compare, rotation, Text};
