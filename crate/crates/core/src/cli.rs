//! Command-line front end.
//!
//! Exit codes: 0 success, 1 divergence found by `check`, 2 usage error,
//! 3 input error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bench::{self, BenchConfig};
use crate::binary_rle::{binary_cfl, binary_psi, exponent_list, rle};
use crate::borders::border_array;
use crate::check::{self, Alphabet};
use crate::lba::{lba_efficient, lba_naive};
use crate::lyndon::{cfl_factorize, psi_array};
use crate::snlbfp::snlbfp;
use crate::suffix::{
    lyndon_suffix_array_rmq_from, lyndon_suffix_array_scan_from, suffix_array, suffix_types,
    SuffixType,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIVERGENCE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Inputs longer than this are refused by `check`, whose oracles are cubic.
pub const ORACLE_MAX_LEN: usize = 4096;

/// Result of one computation, as rendered by the TSV and JSON writers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub input_length: usize,
    pub arrays: BTreeMap<String, Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, u64>>,
}

impl OutputRecord {
    fn new(input_length: usize) -> Self {
        OutputRecord {
            input_length,
            arrays: BTreeMap::new(),
            timings: None,
        }
    }

    fn with<I, T>(mut self, name: &str, values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: TryInto<i64>,
    {
        let values = values
            .into_iter()
            .map(|v| v.try_into().unwrap_or(i64::MAX))
            .collect();
        self.arrays.insert(name.to_string(), values);
        self
    }

    fn timed(&mut self, stage: &str, nanos: u64) {
        self.timings
            .get_or_insert_with(BTreeMap::new)
            .insert(stage.to_string(), nanos);
    }

    /// One bare line for single-array records, else one `name<TAB>values`
    /// line per array.
    pub fn to_tsv(&self) -> String {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join("\t");
        let mut out = String::new();
        if self.arrays.len() == 1 {
            let values = self.arrays.values().next().unwrap();
            out.push_str(&join(values));
            out.push('\n');
        } else {
            for (name, values) in &self.arrays {
                out.push_str(name);
                if !values.is_empty() {
                    out.push('\t');
                    out.push_str(&join(values));
                }
                out.push('\n');
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Tsv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "lyndon",
    version,
    about = "Lyndon border arrays, Lyndon suffix arrays and related string structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Read the text from FILE instead of stdin.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Reverse the text first (co-Lyndon variants).
    #[arg(long)]
    reverse: bool,
    /// Remove one trailing line terminator from the input.
    #[arg(
        long,
        value_name = "BOOL",
        default_value_t = true,
        num_args = 0..=1,
        default_missing_value = "true",
        action = clap::ArgAction::Set
    )]
    strip_newline: bool,
    /// Report per-stage durations (stderr for TSV, inline for JSON).
    #[arg(long)]
    timings: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Border array.
    Border(InputArgs),
    /// Lyndon border array.
    Lba {
        #[command(flatten)]
        io: InputArgs,
        /// Use the per-prefix chain walk.
        #[arg(long)]
        naive: bool,
    },
    /// Per-prefix Lyndon flags (1 = the prefix is a Lyndon word).
    Psi {
        #[command(flatten)]
        io: InputArgs,
        /// Use the run-length route (binary input only).
        #[arg(long)]
        binary: bool,
    },
    /// Lyndon factorization as factor starts and lengths.
    Cfl {
        #[command(flatten)]
        io: InputArgs,
        /// Use the run-length route (binary input only).
        #[arg(long)]
        binary: bool,
    },
    /// Shortest border-free non-Lyndon prefix.
    Snlbfp(InputArgs),
    /// Run-length encoding of a binary text.
    Rle(InputArgs),
    /// Suffix array.
    Sa {
        #[command(flatten)]
        io: InputArgs,
        /// Also print the rank array.
        #[arg(long)]
        rank: bool,
        /// Also print suffix types (1 = S, 0 = L).
        #[arg(long)]
        types: bool,
    },
    /// Lyndon suffix array.
    Lsa {
        #[command(flatten)]
        io: InputArgs,
        /// Extract with range-maximum queries instead of the rank scan.
        #[arg(long)]
        rmq: bool,
        /// Pad with -1 to the input length.
        #[arg(long)]
        padded: bool,
    },
    /// All arrays laid out as a table, one row per array.
    Table(InputArgs),
    /// Compare every fast path with the brute-force oracles.
    Check(CheckArgs),
    /// Time the linear-time constructions on doubling random inputs.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[command(flatten)]
    io: InputArgs,
    #[arg(long, value_enum, default_value_t = Alphabet::Binary)]
    alphabet: Alphabet,
    /// Check every string over the alphabet up to this length.
    #[arg(long, value_name = "N")]
    exhaustive_upto: Option<usize>,
    /// Check this many random strings.
    #[arg(long, value_name = "COUNT")]
    random: Option<usize>,
    /// Maximum length of random strings.
    #[arg(long, default_value_t = 200)]
    max_len: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 16)]
    from_exp: u32,
    #[arg(long, default_value_t = 22)]
    to_exp: u32,
    #[arg(long, value_enum, default_value_t = Alphabet::Binary)]
    alphabet: Alphabet,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    reps: usize,
    /// Milliseconds per stage after which no further rounds start.
    #[arg(long, default_value_t = 2000)]
    budget_ms: u64,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

enum Failure {
    Input(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Runs the CLI against the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(
        args,
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

pub fn run_with_io<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn read_text(io: &InputArgs, stdin: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    let mut bytes = match &io.input {
        Some(path) => std::fs::read(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = Vec::new();
            stdin.read_to_end(&mut buf)?;
            buf
        }
    };
    if io.strip_newline && bytes.last() == Some(&b'\n') {
        bytes.pop();
        if bytes.last() == Some(&b'\r') {
            bytes.pop();
        }
    }
    if io.reverse {
        bytes.reverse();
    }
    Ok(bytes)
}

fn timed<T>(record: &mut Option<BTreeMap<String, u64>>, stage: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    if let Some(map) = record {
        map.insert(stage.to_string(), start.elapsed().as_nanos() as u64);
    }
    out
}

fn emit(
    record: &OutputRecord,
    format: Format,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), Failure> {
    match format {
        Format::Tsv => {
            stdout.write_all(record.to_tsv().as_bytes())?;
            if let Some(timings) = &record.timings {
                for (stage, nanos) in timings {
                    writeln!(stderr, "timing\t{stage}\t{nanos}")?;
                }
            }
        }
        Format::Json => writeln!(stdout, "{}", record.to_json())?,
    }
    Ok(())
}

fn compute(command: &Command, t: &[u8], timings: bool) -> Result<OutputRecord, Failure> {
    let n = t.len();
    let mut clock = timings.then(BTreeMap::new);
    let mut rec = OutputRecord::new(n);
    rec = match command {
        Command::Border(_) => {
            let b = timed(&mut clock, "border_array", || border_array(t));
            rec.with("beta", b.into_vec())
        }
        Command::Lba { naive, .. } => {
            let v = if *naive {
                timed(&mut clock, "lba_naive", || lba_naive(t))
            } else {
                timed(&mut clock, "lba_efficient", || lba_efficient(t))
            };
            rec.with("lbeta", v.into_vec())
        }
        Command::Psi { binary, .. } => {
            let psi = if *binary {
                timed(&mut clock, "binary_psi", || binary_psi(t))?
            } else {
                timed(&mut clock, "psi_array", || psi_array(t))
            };
            rec.with("psi", psi.flags().iter().map(|&f| f as i64))
        }
        Command::Cfl { binary, .. } => {
            let f = if *binary {
                timed(&mut clock, "binary_cfl", || binary_cfl(t))?
            } else {
                timed(&mut clock, "cfl_factorize", || cfl_factorize(t))
            };
            rec.with("factor_start", f.spans().iter().map(|s| s.start))
                .with("factor_len", f.spans().iter().map(|s| s.len))
        }
        Command::Snlbfp(_) => {
            let r = timed(&mut clock, "snlbfp", || snlbfp(t));
            rec.with("snlbfp", r.prefix_len)
                .with("witness_factor", r.witness_factor)
        }
        Command::Rle(_) => {
            let runs = timed(&mut clock, "rle", || rle(t))?;
            rec.with("symbols", runs.runs().iter().map(|&(s, _)| s))
                .with("exponents", exponent_list(&runs).0)
        }
        Command::Sa { rank, types, .. } => {
            let sa = timed(&mut clock, "suffix_array", || suffix_array(t));
            if *rank {
                rec = rec.with("rank", sa.rank_array().ranks().to_vec());
            }
            if *types {
                let ty = suffix_types(t);
                rec = rec.with(
                    "s_type",
                    ty.types().iter().map(|&x| (x == SuffixType::S) as i64),
                );
            }
            rec.with("sa", sa.into_vec())
        }
        Command::Lsa { rmq, padded, .. } => {
            let sa = timed(&mut clock, "suffix_array", || suffix_array(t));
            let lsa = if *rmq {
                timed(&mut clock, "lsa_rmq", || lyndon_suffix_array_rmq_from(&sa))
            } else {
                timed(&mut clock, "lsa_scan", || {
                    lyndon_suffix_array_scan_from(&sa.rank_array())
                })
            };
            if *padded {
                rec.with("lsa", lsa.padded(n))
            } else {
                rec.with("lsa", lsa.into_vec())
            }
        }
        Command::Table(_) => {
            let sa = suffix_array(t);
            let lsa = lyndon_suffix_array_scan_from(&sa.rank_array());
            rec.with("symbols", t.iter().copied())
                .with("beta", border_array(t).into_vec())
                .with("lbeta", lba_efficient(t).into_vec())
                .with("sa", sa.into_vec())
                .with("lsa", lsa.padded(n))
        }
        Command::Check(_) | Command::Bench(_) => unreachable!("handled separately"),
    };
    if let Some(c) = clock {
        for (stage, nanos) in c {
            rec.timed(&stage, nanos);
        }
    }
    Ok(rec)
}

/// Rows `i`, `s[i]`, `beta[i]`, `Lbeta[i]`, `A[i]`, `LS[i]`, tab separated.
pub fn render_table(rec: &OutputRecord) -> String {
    let n = rec.input_length;
    let row = |label: &str, cells: Vec<String>| {
        let mut line = label.to_string();
        for c in cells {
            line.push('\t');
            line.push_str(&c);
        }
        line.push('\n');
        line
    };
    let ints =
        |name: &str| -> Vec<String> { rec.arrays[name].iter().map(i64::to_string).collect() };
    let symbols = rec.arrays["symbols"]
        .iter()
        .map(|&c| {
            let b = c as u8;
            if b.is_ascii_graphic() {
                (b as char).to_string()
            } else {
                format!("\\x{b:02x}")
            }
        })
        .collect();
    let mut out = String::new();
    out.push_str(&row("i", (0..n).map(|i| i.to_string()).collect()));
    out.push_str(&row("s[i]", symbols));
    out.push_str(&row("beta[i]", ints("beta")));
    out.push_str(&row("Lbeta[i]", ints("lbeta")));
    out.push_str(&row("A[i]", ints("sa")));
    out.push_str(&row("LS[i]", ints("lsa")));
    out
}

fn execute(
    command: Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    match &command {
        Command::Check(args) => return run_check(args, stdin, stdout, stderr),
        Command::Bench(args) => return run_bench(args, stdout),
        _ => {}
    }
    let io = match &command {
        Command::Border(io) | Command::Snlbfp(io) | Command::Rle(io) | Command::Table(io) => io,
        Command::Lba { io, .. }
        | Command::Psi { io, .. }
        | Command::Cfl { io, .. }
        | Command::Sa { io, .. }
        | Command::Lsa { io, .. } => io,
        Command::Check(_) | Command::Bench(_) => unreachable!(),
    };
    let t = read_text(io, stdin)?;
    let rec = compute(&command, &t, io.timings)?;
    if matches!(command, Command::Table(_)) && io.format == Format::Tsv {
        stdout.write_all(render_table(&rec).as_bytes())?;
    } else {
        emit(&rec, io.format, stdout, stderr)?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckReport<'a> {
    checked: usize,
    divergences: &'a [check::Divergence],
}

fn run_check(
    args: &CheckArgs,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    let mut corpus = Vec::new();
    if let Some(max) = args.exhaustive_upto {
        corpus.extend(check::exhaustive(args.alphabet, max));
    }
    if let Some(count) = args.random {
        corpus.extend(check::random_corpus(
            args.alphabet,
            count,
            args.max_len,
            args.seed,
        ));
    }
    if args.exhaustive_upto.is_none() && args.random.is_none() {
        corpus.push(read_text(&args.io, stdin)?);
    }
    if let Some(long) = corpus.iter().find(|t| t.len() > ORACLE_MAX_LEN) {
        return Err(Failure::Input(format!(
            "input of length {} exceeds the oracle limit of {ORACLE_MAX_LEN}",
            long.len()
        )));
    }

    let divergences = check::check_corpus(&corpus);
    match args.io.format {
        Format::Tsv => {
            for d in &divergences {
                writeln!(
                    stdout,
                    "DIVERGENCE\t{}\t{:?}\t{}",
                    d.what, d.input, d.detail
                )?;
            }
            writeln!(
                stdout,
                "checked\t{}\tdivergences\t{}",
                corpus.len(),
                divergences.len()
            )?;
        }
        Format::Json => {
            let report = CheckReport {
                checked: corpus.len(),
                divergences: &divergences,
            };
            writeln!(
                stdout,
                "{}",
                serde_json::to_string(&report).expect("serializes")
            )?;
        }
    }
    if divergences.is_empty() {
        Ok(EXIT_OK)
    } else {
        writeln!(stderr, "{} divergence(s) found", divergences.len())?;
        Ok(EXIT_DIVERGENCE)
    }
}

fn run_bench(args: &BenchArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    if args.from_exp > args.to_exp || args.to_exp > 30 {
        return Err(Failure::Input(format!(
            "bad size range 2^{}..=2^{}",
            args.from_exp, args.to_exp
        )));
    }
    let rows = bench::run(&BenchConfig {
        min_exp: args.from_exp,
        max_exp: args.to_exp,
        alphabet: args.alphabet,
        seed: args.seed,
        reps: args.reps,
        budget: std::time::Duration::from_millis(args.budget_ms),
    });
    match args.format {
        Format::Tsv => {
            writeln!(stdout, "stage\tn\tnanos\tns_per_symbol\tgrowth")?;
            for r in &rows {
                let growth = r.growth.map_or("-".to_string(), |g| format!("{g:.3}"));
                writeln!(
                    stdout,
                    "{}\t{}\t{}\t{:.3}\t{}",
                    r.stage.name(),
                    r.n,
                    r.nanos,
                    r.ns_per_symbol,
                    growth
                )?;
            }
        }
        Format::Json => {
            writeln!(
                stdout,
                "{}",
                serde_json::to_string(&rows).expect("serializes")
            )?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &str) -> (i32, String, String) {
        let mut argv = vec!["lyndon"];
        argv.extend_from_slice(args);
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with_io(argv, &mut input.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn basic_commands() {
        assert_eq!(run_str(&["border"], "aaaa\n").1, "0\t1\t2\t3\n");
        assert_eq!(
            run_str(&["lsa", "--format", "tsv"], "abaabaaabbaabaab").1,
            "5\t13\t14\t15\n"
        );
        assert_eq!(
            run_str(&["lsa", "--rmq"], "abaabaaabbaabaab").1,
            "5\t13\t14\t15\n"
        );
        assert_eq!(run_str(&["psi"], "aaab").1, "1\t0\t0\t1\n");
        assert_eq!(
            run_str(&["cfl"], "abaabaaabbaabaab").1,
            "factor_len\t2\t3\t11\nfactor_start\t0\t2\t5\n"
        );
        assert_eq!(run_str(&["snlbfp"], "abaab").1, "snlbfp\nwitness_factor\n");
        assert_eq!(run_str(&["lba", "--naive"], "aaa").1, "0\t1\t1\n");
    }

    #[test]
    fn newline_handling_and_reverse() {
        assert_eq!(run_str(&["border"], "ab\r\n").1, "0\t0\n");
        assert_eq!(
            run_str(&["border", "--strip-newline=false"], "a\n").1,
            "0\t0\n"
        );
        assert_eq!(run_str(&["lsa", "--reverse"], "ba").1, "0\t1\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["frobnicate"], "").0, EXIT_USAGE);
        assert_eq!(run_str(&["border", "--bogus"], "").0, EXIT_USAGE);
        assert!(!run_str(&["nope"], "").2.is_empty());
        assert_eq!(run_str(&["rle"], "abc").0, EXIT_INPUT);
        assert_eq!(
            run_str(&["border", "--input", "/definitely/not/here"], "").0,
            EXIT_INPUT
        );
        assert_eq!(run_str(&["--help"], "").0, EXIT_OK);
        let (code, out, _) = run_str(&["check"], "abaabaaabbaabaab");
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "checked\t1\tdivergences\t0\n");
    }

    #[test]
    fn json_round_trip() {
        let (_, out, _) = run_str(&["sa", "--format", "json", "--rank"], "banana");
        let rec: OutputRecord = serde_json::from_str(out.trim_end()).unwrap();
        assert_eq!(rec.to_json(), out.trim_end());
        assert_eq!(rec.input_length, 6);
        assert_eq!(rec.arrays["sa"], [5, 3, 1, 0, 4, 2]);
    }

    #[test]
    fn timings_go_to_stderr_in_tsv() {
        let (_, out, err) = run_str(&["border", "--timings"], "abab");
        assert_eq!(out, "0\t0\t1\t2\n");
        assert!(err.starts_with("timing\tborder_array\t"));
        let (_, out, _) = run_str(&["border", "--timings", "--format", "json"], "abab");
        assert!(out.contains("\"timings\":{\"border_array\":"));
    }
}
