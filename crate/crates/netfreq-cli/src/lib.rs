//! Command-line surface for net frequency computation.
//!
//! Subcommands: `build` (index construction and persistence), `query`
//! (single-string NF), `all` (every string with positive NF), `stats`
//! (corpus measures), `fib` (Fibonacci word generation and verification),
//! and `bench` (query-set timing harness).

pub mod bench;
pub mod corpus;
mod input;
pub mod pattern;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use netfreq::all_nf::{self, NfRecord};
use netfreq::oracle;
use netfreq::{
    all_nf_extract_direct, all_nf_extract_traverse, compute_stats, fibonacci, single_nf_asa,
    single_nf_crl, single_nf_hsa, CrlIndex, NfMultiset, Span, SuffixIndex, SENTINEL,
};

use input::{IndexedInput, RawInput};

/// Failures carry the process exit code: 2 for input validation, 1 otherwise.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Failure(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Failure(m) => m,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "netfreq",
    version,
    about = "Net frequency of strings in a text, over an augmented suffix array"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an index and write it to a file
    Build {
        #[command(flatten)]
        input: RawInput,
        /// Output path for the serialized index
        #[arg(long, short, value_name = "FILE")]
        output: PathBuf,
    },
    /// Net frequency of one pattern (prints `nf=<value> f=<frequency>`)
    Query {
        #[command(flatten)]
        input: IndexedInput,
        /// Pattern, literal bytes with \xHH escapes
        #[arg(long, short, value_name = "PATTERN")]
        pattern: String,
        #[arg(long, value_enum, default_value_t = QueryAlgo::Crl)]
        algo: QueryAlgo,
        /// Cross-check against the brute-force oracles and fail on mismatch
        #[arg(long, hide = true)]
        oracle: bool,
    },
    /// Every string with positive net frequency, lexicographically sorted
    All {
        #[command(flatten)]
        input: IndexedInput,
        /// extract: the string/NF multiset; report: one occurrence per string
        #[arg(long, value_enum, default_value_t = AllMode::Extract)]
        mode: AllMode,
        #[arg(long, value_enum, default_value_t = AllAlgo::Direct)]
        algo: AllAlgo,
        /// Drop strings shorter than this at emission
        #[arg(long, default_value_t = 1, value_name = "LEN")]
        min_len: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
        format: OutputFormat,
    },
    /// Corpus statistics as JSON
    Stats {
        #[command(flatten)]
        input: IndexedInput,
        /// Also emit a second record restricted to strings of at most this length
        #[arg(long, value_name = "LEN")]
        length_ub: Option<usize>,
    },
    /// Print the i-th Fibonacci word, or verify its net-frequency structure
    Fib {
        index: usize,
        /// Emit a JSON verification record instead of the word
        #[arg(long)]
        verify: bool,
    },
    /// Time the query algorithms over a generated query set (CSV on stdout)
    Bench {
        #[command(flatten)]
        input: IndexedInput,
        #[arg(long, value_enum, default_value_t = BenchModeArg::TokenConcat)]
        mode: BenchModeArg,
        /// Number of queries to draw
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// RNG seed; the NF_SEED environment variable overrides it
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        min_len: usize,
        #[arg(long, default_value_t = 35)]
        max_len: usize,
        /// Comma-separated subset of crl,asa,hsa
        #[arg(long, default_value = "crl,asa,hsa")]
        algos: String,
        /// Token delimiter byte for token-concat mode
        #[arg(long, default_value_t = 0x20)]
        delimiter: u8,
        /// Write the deterministic query manifest (id, query, length, f, nf)
        #[arg(long, value_name = "FILE")]
        queries_out: Option<PathBuf>,
        /// Fan queries out over this many worker threads
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum QueryAlgo {
    Crl,
    Asa,
    Hsa,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AllMode {
    Extract,
    Report,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AllAlgo {
    Direct,
    Traverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BenchModeArg {
    TokenConcat,
    RandomSpan,
}

/// Parses the process arguments, runs the command, and returns the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Build { input, output } => cmd_build(input, output),
        Command::Query { input, pattern, algo, oracle } => cmd_query(input, pattern, algo, oracle),
        Command::All { input, mode, algo, min_len, format } => {
            cmd_all(input, mode, algo, min_len, format)
        }
        Command::Stats { input, length_ub } => cmd_stats(input, length_ub),
        Command::Fib { index, verify } => cmd_fib(index, verify),
        Command::Bench {
            input,
            mode,
            count,
            seed,
            min_len,
            max_len,
            algos,
            delimiter,
            queries_out,
            threads,
        } => {
            let env_seed = match std::env::var("NF_SEED") {
                Ok(s) => Some(s.parse::<u64>().map_err(|_| {
                    CliError::Validation(format!("NF_SEED must be a 64-bit integer, got {:?}", s))
                })?),
                Err(_) => None,
            };
            let mode = match mode {
                BenchModeArg::TokenConcat => bench::BenchMode::TokenConcat { delimiter },
                BenchModeArg::RandomSpan => bench::BenchMode::RandomSpan,
            };
            let spec = bench::BenchSpec {
                mode,
                min_len,
                max_len,
                count,
                seed: env_seed.unwrap_or(seed),
            };
            cmd_bench(input, spec, &algos, queries_out, threads)
        }
    }
}

fn cmd_build(input: RawInput, output: PathBuf) -> Result<(), CliError> {
    let text = input.load_text()?;
    let started = Instant::now();
    let idx = SuffixIndex::build(text);
    let seconds = started.elapsed().as_secs_f64();
    idx.save(&output)?;
    println!("n={} sigma={} build_seconds={:.3}", idx.n(), idx.text().sigma(), seconds);
    Ok(())
}

fn parse_query_pattern(pattern: &str) -> Result<Vec<u8>, CliError> {
    let bytes = pattern::parse_pattern(pattern).map_err(CliError::Validation)?;
    if bytes.is_empty() {
        return Err(CliError::Validation("pattern must be non-empty".into()));
    }
    if bytes.contains(&SENTINEL) {
        return Err(CliError::Validation("pattern may not contain the sentinel byte 0x00".into()));
    }
    Ok(bytes)
}

fn cmd_query(
    input: IndexedInput,
    pattern: String,
    algo: QueryAlgo,
    oracle_check: bool,
) -> Result<(), CliError> {
    let pat = parse_query_pattern(&pattern)?;
    let idx = input.load_index()?;
    let nf = match algo {
        QueryAlgo::Crl => {
            let crl = CrlIndex::build(&idx);
            single_nf_crl(&idx, &crl, &pat)
        }
        QueryAlgo::Asa => single_nf_asa(&idx, &pat),
        QueryAlgo::Hsa => single_nf_hsa(&idx, &pat),
    };
    let f = idx.frequency(&pat);
    println!("nf={} f={}", nf, f);
    if oracle_check {
        let by_def = oracle::nf_by_definition(idx.text(), &pat);
        let by_char = oracle::nf_by_characteristic(idx.text(), &pat);
        let oracle_f = oracle::frequency(idx.text(), &pat);
        println!("oracle_definition={} oracle_characteristic={} oracle_f={}", by_def, by_char, oracle_f);
        if by_def != nf || by_char != nf || oracle_f != f {
            return Err(CliError::Failure("oracle mismatch".into()));
        }
    }
    Ok(())
}

fn cmd_all(
    input: IndexedInput,
    mode: AllMode,
    algo: AllAlgo,
    min_len: usize,
    format: OutputFormat,
) -> Result<(), CliError> {
    if mode == AllMode::Report && algo == AllAlgo::Direct {
        return Err(CliError::Validation(
            "report mode needs a witness occurrence per string; use --algo traverse".into(),
        ));
    }
    let idx = input.load_index()?;
    // (string, nf, span) triples, then sort by string for deterministic output
    type Record = (Vec<u8>, usize, Option<Span>);
    let (multiset, records): (NfMultiset, Vec<Record>) = match algo {
        AllAlgo::Direct => {
            let m = all_nf_extract_direct(&idx);
            let recs = m.sorted().into_iter().map(|(s, c)| (s.to_vec(), c, None)).collect();
            (m, recs)
        }
        AllAlgo::Traverse => {
            let (m, reports) = all_nf_extract_traverse(&idx);
            let mut recs: Vec<Record> = reports
                .into_iter()
                .map(|r| (idx.text().substring(r.span).to_vec(), r.nf, Some(r.span)))
                .collect();
            recs.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            (m, recs)
        }
    };

    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let emitted = records.iter().filter(|(s, _, _)| s.len() >= min_len).count();
    let iter = records
        .iter()
        .filter(|(s, _, _)| s.len() >= min_len)
        .map(|(s, nf, span)| NfRecord { string: s, nf: *nf, span: *span });
    match format {
        OutputFormat::Tsv => all_nf::write_tsv(&mut out, iter)?,
        OutputFormat::Json => all_nf::write_json(&mut out, iter)?,
    }
    out.flush()?;
    eprintln!(
        "strings={} sum_nf={} big_n={} big_l={} emitted={}",
        multiset.len(),
        multiset.total_nf(),
        multiset.total_length(),
        multiset.weighted_length(),
        emitted
    );
    Ok(())
}

fn cmd_stats(input: IndexedInput, length_ub: Option<usize>) -> Result<(), CliError> {
    let idx = input.load_index()?;
    let multiset = all_nf_extract_direct(&idx);
    let stats = compute_stats(&idx, &multiset);
    println!("{}", serde_json::to_string(&stats).expect("stats serialize"));
    if let Some(ub) = length_ub {
        let bounded: NfMultiset =
            multiset.iter().filter(|(s, _)| s.len() <= ub).map(|(s, c)| (s.to_vec(), c)).collect();
        let stats_ub = compute_stats(&idx, &bounded);
        println!("{}", serde_json::to_string(&stats_ub).expect("stats serialize"));
    }
    Ok(())
}

fn cmd_fib(index: usize, verify: bool) -> Result<(), CliError> {
    if verify {
        let report =
            fibonacci::verify_theorems(index).map_err(|e| CliError::Validation(e.to_string()))?;
        println!("{}", serde_json::to_string(&report).expect("report serialize"));
    } else {
        let word = fibonacci::fib_word(index).map_err(|e| CliError::Validation(e.to_string()))?;
        let mut out = std::io::stdout().lock();
        out.write_all(word.content())?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn cmd_bench(
    input: IndexedInput,
    spec: bench::BenchSpec,
    algos: &str,
    queries_out: Option<PathBuf>,
    threads: usize,
) -> Result<(), CliError> {
    let algos = bench::Algo::parse_list(algos).map_err(CliError::Validation)?;
    if threads == 0 {
        return Err(CliError::Validation("threads must be at least 1".into()));
    }
    let idx = input.load_index()?;
    let queries =
        bench::generate_queries(idx.text(), &spec).map_err(CliError::Validation)?;
    let classified = bench::classify_queries(&idx, queries);
    if let Some(path) = queries_out {
        let mut w = BufWriter::new(File::create(path)?);
        bench::write_manifest(&mut w, &classified)?;
        w.flush()?;
    }
    let crl = CrlIndex::build(&idx);
    let mut rows = Vec::new();
    for algo in algos {
        let times = bench::measure(&idx, &crl, &classified, algo, threads);
        rows.extend(bench::aggregate(algo, &classified, &times));
    }
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    bench::write_csv(&mut out, &rows)?;
    out.flush()?;
    Ok(())
}
