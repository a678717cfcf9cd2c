//! Doubling-size timing runs used to check empirical linear scaling.

use std::time::{Duration, Instant};

use crate::borders::border_array;
use crate::check::{random_text, Alphabet};
use crate::lba::lba_efficient;
use crate::suffix::{lyndon_suffix_array_scan, suffix_array};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    BorderArray,
    LbaEfficient,
    SuffixArray,
    LsaScan,
}

impl Stage {
    pub const ALL: [Stage; 4] = [
        Stage::BorderArray,
        Stage::LbaEfficient,
        Stage::SuffixArray,
        Stage::LsaScan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::BorderArray => "border_array",
            Stage::LbaEfficient => "lba_efficient",
            Stage::SuffixArray => "suffix_array",
            Stage::LsaScan => "lsa_scan",
        }
    }

    fn run(self, t: &[u8]) -> usize {
        match self {
            Stage::BorderArray => border_array(t).len(),
            Stage::LbaEfficient => lba_efficient(t).len(),
            Stage::SuffixArray => suffix_array(t).len(),
            Stage::LsaScan => lyndon_suffix_array_scan(t).len(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BenchConfig {
    pub min_exp: u32,
    pub max_exp: u32,
    pub alphabet: Alphabet,
    pub seed: u64,
    /// Minimum number of paired measurements per neighbouring size pair.
    pub reps: usize,
    /// Extra pairs are measured until a stage has used about this much time.
    pub budget: Duration,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            min_exp: 16,
            max_exp: 22,
            alphabet: Alphabet::Binary,
            seed: 0,
            reps: 3,
            budget: Duration::from_secs(2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct BenchRow {
    pub stage: Stage,
    pub n: usize,
    pub nanos: u64,
    pub ns_per_symbol: f64,
    /// Median time ratio to the previous (half-size) row of the same stage.
    pub growth: Option<f64>,
}

/// Stops glibc from serving large blocks with fresh `mmap` calls.
///
/// Above its mmap threshold (32 MiB at most) every allocation is faulted in
/// page by page and unmapped on free, which makes the largest sizes look
/// superlinear. Keeping them on the heap lets repeated runs reuse warm pages.
/// A no-op on other platforms.
pub fn keep_heap_resident() {
    #[cfg(all(target_os = "linux", target_env = "gnu"))]
    {
        extern "C" {
            fn mallopt(param: i32, value: i32) -> i32;
        }
        const M_TRIM_THRESHOLD: i32 = -1;
        const M_MMAP_THRESHOLD: i32 = -3;
        // SAFETY: mallopt only adjusts allocator tuning parameters.
        unsafe {
            mallopt(M_MMAP_THRESHOLD, 1 << 30);
            mallopt(M_TRIM_THRESHOLD, 1 << 30);
        }
    }
}

/// Times every stage at sizes `2^min_exp ..= 2^max_exp`.
///
/// Each pair of neighbouring sizes is timed alternately, so slow drift in
/// machine load hits both sides of a pair alike. `nanos` is the fastest run
/// seen at a size; `growth` is the median of the paired ratios.
/// Calls [`keep_heap_resident`] first.
pub fn run(config: &BenchConfig) -> Vec<BenchRow> {
    keep_heap_resident();
    let exps: Vec<u32> = (config.min_exp..=config.max_exp).collect();
    let texts: Vec<Vec<u8>> = exps
        .iter()
        .map(|&exp| random_text(config.alphabet, 1usize << exp, text_seed(config, exp)))
        .collect();
    let pair_budget = config.budget / exps.len().saturating_sub(1).max(1) as u32;

    let mut best = vec![[u64::MAX; 4]; exps.len()];
    let mut growth = vec![[None; 4]; exps.len()];
    for (slot, stage) in Stage::ALL.into_iter().enumerate() {
        for t in &texts {
            std::hint::black_box(stage.run(t));
        }
        if exps.len() == 1 {
            best[0][slot] = time_stage(stage, &texts[0]);
        }
        for i in 1..exps.len() {
            let started = Instant::now();
            let mut ratios = Vec::new();
            while ratios.len() < config.reps.max(1)
                || (started.elapsed() < pair_budget && ratios.len() < 50)
            {
                let small = time_stage(stage, &texts[i - 1]);
                let large = time_stage(stage, &texts[i]);
                best[i - 1][slot] = best[i - 1][slot].min(small);
                best[i][slot] = best[i][slot].min(large);
                ratios.push(large as f64 / small as f64);
            }
            growth[i][slot] = Some(median(&mut ratios));
        }
    }

    let mut rows = Vec::new();
    for (i, &exp) in exps.iter().enumerate() {
        for (slot, stage) in Stage::ALL.into_iter().enumerate() {
            let nanos = best[i][slot];
            let n = 1usize << exp;
            rows.push(BenchRow {
                stage,
                n,
                nanos,
                ns_per_symbol: nanos as f64 / n as f64,
                growth: growth[i][slot],
            });
        }
    }
    rows
}

fn median(xs: &mut [f64]) -> f64 {
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2.0
    }
}

/// Fastest run of `stage` on `t` within one measurement round.
pub fn time_stage(stage: Stage, t: &[u8]) -> u64 {
    fastest_within(ROUND_QUANTUM, || stage.run(t)).max(1)
}

/// Seed of the text that [`run`] times at size `2^exp`.
pub fn text_seed(config: &BenchConfig, exp: u32) -> u64 {
    config.seed ^ exp as u64
}

/// Within a round, short runs are repeated until this much time has passed.
const ROUND_QUANTUM: Duration = Duration::from_millis(20);

/// Fastest of at least one run of `f`, repeating until `quantum` has passed.
fn fastest_within(quantum: Duration, mut f: impl FnMut() -> usize) -> u64 {
    let started = Instant::now();
    let mut best = u64::MAX;
    loop {
        let start = Instant::now();
        std::hint::black_box(f());
        best = best.min(start.elapsed().as_nanos() as u64);
        if started.elapsed() >= quantum {
            return best;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_cover_every_stage_and_size() {
        let rows = run(&BenchConfig {
            min_exp: 4,
            max_exp: 6,
            reps: 1,
            budget: Duration::ZERO,
            ..BenchConfig::default()
        });
        assert_eq!(rows.len(), 3 * Stage::ALL.len());
        assert!(rows[..4].iter().all(|r| r.growth.is_none()));
        assert!(rows[4..].iter().all(|r| r.growth.is_some()));
    }
}
