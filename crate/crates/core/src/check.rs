//! Differential checking of every fast path against the brute-force oracles,
//! plus the corpus generators used by the `check` command.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::binary_rle::{binary_cfl, binary_is_lyndon, binary_psi};
use crate::borders::border_array;
use crate::lba::{lba_efficient_with_stats, lba_naive};
use crate::lyndon::{cfl_factorize, is_lyndon, psi_array};
use crate::oracle;
use crate::snlbfp::snlbfp;
use crate::suffix::{lyndon_suffix_array_rmq, lyndon_suffix_array_scan, suffix_array};

/// One disagreement between a fast path and its oracle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct Divergence {
    pub input: String,
    pub what: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Alphabet {
    /// `ab`
    Binary,
    /// `abc`
    Ternary,
    /// `a..=z`
    Lower,
    /// all 256 byte values
    Bytes,
}

impl Alphabet {
    pub fn symbols(self) -> Vec<u8> {
        match self {
            Alphabet::Binary => b"ab".to_vec(),
            Alphabet::Ternary => b"abc".to_vec(),
            Alphabet::Lower => (b'a'..=b'z').collect(),
            Alphabet::Bytes => (0..=255).collect(),
        }
    }
}

/// Every string over `alphabet` with length in `1..=max_len`.
pub fn exhaustive(alphabet: Alphabet, max_len: usize) -> Vec<Vec<u8>> {
    let symbols = alphabet.symbols();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                symbols.iter().map(move |&c| {
                    let mut v = Vec::with_capacity(w.len() + 1);
                    v.extend_from_slice(w);
                    v.push(c);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// `count` random strings with lengths uniform in `1..=max_len`.
pub fn random_corpus(alphabet: Alphabet, count: usize, max_len: usize, seed: u64) -> Vec<Vec<u8>> {
    let symbols = alphabet.symbols();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_len.max(1));
            (0..n)
                .map(|_| symbols[rng.gen_range(0..symbols.len())])
                .collect()
        })
        .collect()
}

pub fn random_text(alphabet: Alphabet, n: usize, seed: u64) -> Vec<u8> {
    let symbols = alphabet.symbols();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| symbols[rng.gen_range(0..symbols.len())])
        .collect()
}

fn distinct_symbols(t: &[u8]) -> usize {
    let mut seen = [false; 256];
    t.iter().for_each(|&c| seen[c as usize] = true);
    seen.iter().filter(|&&s| s).count()
}

/// Runs every fast path on `t` and reports each disagreement with an oracle.
pub fn check_text(t: &[u8]) -> Vec<Divergence> {
    let mut out = Vec::new();
    let mut diff = |what: &'static str, same: bool, detail: &dyn Fn() -> String| {
        if !same {
            out.push(Divergence {
                input: String::from_utf8_lossy(t).into_owned(),
                what,
                detail: detail(),
            });
        }
    };

    let beta = border_array(t);
    let beta_ref = oracle::oracle_border_array(t);
    diff("border_array", beta == beta_ref, &|| {
        format!("{:?} != {:?}", beta.values(), beta_ref.values())
    });
    if t.is_empty() {
        return out;
    }

    let lyn = oracle::oracle_is_lyndon(t);
    diff("is_lyndon", is_lyndon(t) == lyn, &|| {
        format!("oracle says {lyn}")
    });

    let lba_ref = oracle::oracle_lba(t);
    let (fast, stats) = lba_efficient_with_stats(t);
    let naive = lba_naive(t);
    diff("lba_efficient", fast == lba_ref, &|| {
        format!("{:?} != {:?}", fast.values(), lba_ref.values())
    });
    diff("lba_naive", naive == lba_ref, &|| {
        format!("{:?} != {:?}", naive.values(), lba_ref.values())
    });
    diff("lba_traversals", stats.chain_traversals <= t.len(), &|| {
        format!(
            "{} chain traversals for n = {}",
            stats.chain_traversals,
            t.len()
        )
    });

    let psi_ref = oracle::oracle_psi(t);
    let psi = psi_array(t);
    diff("psi_array", psi == psi_ref, &|| {
        format!(
            "{:?} != {:?}",
            psi.lyndon_lengths(),
            psi_ref.lyndon_lengths()
        )
    });

    let r_ref = oracle::oracle_snlbfp(t);
    let r = snlbfp(t).prefix_len;
    diff("snlbfp", r == r_ref, &|| format!("{r:?} != {r_ref:?}"));

    let cfl_ref = oracle::oracle_cfl(t);
    let cfl = cfl_factorize(t);
    diff("cfl_factorize", cfl == cfl_ref, &|| {
        format!("{:?} != {:?}", cfl.spans(), cfl_ref.spans())
    });

    if distinct_symbols(t) <= 2 {
        let bl = binary_is_lyndon(t).ok();
        diff("binary_is_lyndon", bl == Some(lyn), &|| {
            format!("{bl:?}, oracle {lyn}")
        });
        let bpsi = binary_psi(t).ok();
        diff("binary_psi", bpsi.as_ref() == Some(&psi_ref), &|| {
            format!("{:?}", bpsi.as_ref().map(|p| p.lyndon_lengths()))
        });
        let bcfl = binary_cfl(t).ok();
        diff("binary_cfl", bcfl.as_ref() == Some(&cfl_ref), &|| {
            format!("{:?}", bcfl.as_ref().map(|f| f.spans().to_vec()))
        });
    }

    let sa_ref = oracle::oracle_suffix_array(t);
    let sa = suffix_array(t);
    diff("suffix_array", sa == sa_ref, &|| {
        format!("{:?} != {:?}", sa.order(), sa_ref.order())
    });

    let lsa_ref = oracle::oracle_lsa(t);
    let rmq = lyndon_suffix_array_rmq(t);
    let scan = lyndon_suffix_array_scan(t);
    diff("lyndon_suffix_array_rmq", rmq == lsa_ref, &|| {
        format!("{:?} != {:?}", rmq.positions(), lsa_ref.positions())
    });
    diff("lyndon_suffix_array_scan", scan == lsa_ref, &|| {
        format!("{:?} != {:?}", scan.positions(), lsa_ref.positions())
    });
    out
}

/// Checks every text in parallel; the result is sorted, so it does not
/// depend on scheduling.
pub fn check_corpus(texts: &[Vec<u8>]) -> Vec<Divergence> {
    let mut all: Vec<Divergence> = texts.par_iter().flat_map(|t| check_text(t)).collect();
    all.sort();
    all
}
