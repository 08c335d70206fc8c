//! Benchmark harness: query generation, classification, timing, aggregation.
//!
//! Queries come from the text itself, either as runs of whole delimiter-
//! separated tokens (news-style) or as random spans (DNA-style), with length
//! bounds applied by rejection. Generation is deterministic given the seed;
//! only the measured times vary between runs.

use std::io::{self, Write};
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use netfreq::{single_nf_asa, single_nf_crl, single_nf_hsa, CrlIndex, SuffixIndex, Text};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchMode {
    /// Runs of consecutive whole tokens, interior delimiters included.
    TokenConcat { delimiter: u8 },
    /// Uniformly random spans of the raw text.
    RandomSpan,
}

#[derive(Debug, Clone)]
pub struct BenchSpec {
    pub mode: BenchMode,
    pub min_len: usize,
    pub max_len: usize,
    pub count: usize,
    pub seed: u64,
}

impl BenchSpec {
    pub fn validate(&self) -> Result<(), String> {
        if self.min_len > self.max_len {
            return Err(format!("min_len {} exceeds max_len {}", self.min_len, self.max_len));
        }
        if self.min_len == 0 {
            return Err("min_len must be at least 1".into());
        }
        if self.count == 0 {
            return Err("count must be at least 1".into());
        }
        Ok(())
    }
}

/// Draws `spec.count` queries from the text. Fails when the text cannot
/// satisfy the length bounds (for example, no tokens of admissible length).
pub fn generate_queries(text: &Text, spec: &BenchSpec) -> Result<Vec<Vec<u8>>, String> {
    spec.validate()?;
    let raw = text.raw();
    let mut rng = ChaCha12Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    match spec.mode {
        BenchMode::TokenConcat { delimiter } => {
            let tokens = tokenize(raw, delimiter);
            if tokens.is_empty() {
                return Err("input has no tokens".into());
            }
            let mut attempts = 0usize;
            let budget = spec.count.saturating_mul(10_000).max(10_000);
            while out.len() < spec.count {
                attempts += 1;
                if attempts > budget {
                    return Err(format!(
                        "could not draw {} token queries within lengths {}..={}",
                        spec.count, spec.min_len, spec.max_len
                    ));
                }
                // start at a random token, extend by whole tokens to min_len,
                // reject overshoots
                let first = rng.gen_range(0..tokens.len());
                let start = tokens[first].0;
                let mut t = first;
                while tokens[t].1 - start < spec.min_len && t + 1 < tokens.len() {
                    t += 1;
                }
                let len = tokens[t].1 - start;
                if len < spec.min_len || len > spec.max_len {
                    continue;
                }
                out.push(raw[start..start + len].to_vec());
            }
        }
        BenchMode::RandomSpan => {
            if raw.len() < spec.min_len {
                return Err("input shorter than min_len".into());
            }
            let max_len = spec.max_len.min(raw.len());
            for _ in 0..spec.count {
                let len = rng.gen_range(spec.min_len..=max_len);
                let start = rng.gen_range(0..=raw.len() - len);
                out.push(raw[start..start + len].to_vec());
            }
        }
    }
    Ok(out)
}

/// Token boundaries (0-based, half-open) between delimiter bytes.
fn tokenize(raw: &[u8], delimiter: u8) -> Vec<(usize, usize)> {
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < raw.len() {
        if raw[i] == delimiter {
            i += 1;
            continue;
        }
        let start = i;
        while i < raw.len() && raw[i] != delimiter {
            i += 1;
        }
        tokens.push((start, i));
    }
    tokens
}

/// A query with its frequency and net frequency, fixed once per run so
/// class assignment does not depend on the measured algorithm.
#[derive(Debug, Clone)]
pub struct ClassifiedQuery {
    pub query: Vec<u8>,
    pub freq: usize,
    pub nf: usize,
}

pub fn classify_queries(idx: &SuffixIndex, queries: Vec<Vec<u8>>) -> Vec<ClassifiedQuery> {
    queries
        .into_iter()
        .map(|query| {
            let freq = idx.frequency(&query);
            let nf = single_nf_asa(idx, &query).get();
            ClassifiedQuery { query, freq, nf }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Crl,
    Asa,
    Hsa,
}

impl Algo {
    pub fn name(&self) -> &'static str {
        match self {
            Algo::Crl => "crl",
            Algo::Asa => "asa",
            Algo::Hsa => "hsa",
        }
    }

    pub fn parse_list(s: &str) -> Result<Vec<Algo>, String> {
        let mut out = Vec::new();
        for part in s.split(',') {
            let algo = match part.trim() {
                "crl" => Algo::Crl,
                "asa" => Algo::Asa,
                "hsa" => Algo::Hsa,
                other => return Err(format!("unknown algorithm {:?}", other)),
            };
            if !out.contains(&algo) {
                out.push(algo);
            }
        }
        if out.is_empty() {
            return Err("no algorithms selected".into());
        }
        Ok(out)
    }

    pub fn run(&self, idx: &SuffixIndex, crl: &CrlIndex, query: &[u8]) -> usize {
        match self {
            Algo::Crl => single_nf_crl(idx, crl, query).get(),
            Algo::Asa => single_nf_asa(idx, query).get(),
            Algo::Hsa => single_nf_hsa(idx, query).get(),
        }
    }
}

/// Per-query times in microseconds, in query order. With `threads > 1` the
/// queries are split into contiguous chunks measured concurrently.
pub fn measure(
    idx: &SuffixIndex,
    crl: &CrlIndex,
    queries: &[ClassifiedQuery],
    algo: Algo,
    threads: usize,
) -> Vec<f64> {
    let time_one = |q: &ClassifiedQuery| {
        let t0 = Instant::now();
        std::hint::black_box(algo.run(idx, crl, &q.query));
        t0.elapsed().as_secs_f64() * 1e6
    };
    if threads <= 1 {
        return queries.iter().map(time_one).collect();
    }
    let chunk = queries.len().div_ceil(threads);
    let mut out = vec![0.0; queries.len()];
    std::thread::scope(|scope| {
        for (slot, part) in out.chunks_mut(chunk).zip(queries.chunks(chunk)) {
            scope.spawn(move || {
                for (s, q) in slot.iter_mut().zip(part) {
                    *s = time_one(q);
                }
            });
        }
    });
    out
}

/// One CSV row: `section,algo,key,count,mean_us`.
#[derive(Debug, Clone)]
pub struct CsvRow {
    pub section: &'static str,
    pub algo: &'static str,
    pub key: String,
    pub count: usize,
    pub mean_us: f64,
}

fn mean(values: impl Iterator<Item = f64>) -> (usize, f64) {
    let mut count = 0usize;
    let mut sum = 0.0;
    for v in values {
        count += 1;
        sum += v;
    }
    (count, if count == 0 { 0.0 } else { sum / count as f64 })
}

/// Aggregates one algorithm's measurements into summary classes (all,
/// repeated, positive NF), per-frequency rows, and per-length rows.
pub fn aggregate(algo: Algo, queries: &[ClassifiedQuery], times: &[f64]) -> Vec<CsvRow> {
    assert_eq!(queries.len(), times.len());
    let mut rows = Vec::new();
    let class = |pred: &dyn Fn(&ClassifiedQuery) -> bool| {
        mean(queries.iter().zip(times).filter(|(q, _)| pred(q)).map(|(_, &t)| t))
    };
    for (key, pred) in [
        ("all", &(|_: &ClassifiedQuery| true) as &dyn Fn(&ClassifiedQuery) -> bool),
        ("f_ge_2", &|q: &ClassifiedQuery| q.freq >= 2),
        ("nf_pos", &|q: &ClassifiedQuery| q.nf > 0),
    ] {
        let (count, mean_us) = class(pred);
        rows.push(CsvRow { section: "summary", algo: algo.name(), key: key.into(), count, mean_us });
    }

    let mut by_freq: std::collections::BTreeMap<usize, Vec<f64>> = Default::default();
    let mut by_len: std::collections::BTreeMap<usize, Vec<f64>> = Default::default();
    for (q, &t) in queries.iter().zip(times) {
        by_freq.entry(q.freq).or_default().push(t);
        by_len.entry(q.query.len()).or_default().push(t);
    }
    for (f, ts) in by_freq {
        let (count, mean_us) = mean(ts.into_iter());
        rows.push(CsvRow { section: "by_freq", algo: algo.name(), key: f.to_string(), count, mean_us });
    }
    for (l, ts) in by_len {
        let (count, mean_us) = mean(ts.into_iter());
        rows.push(CsvRow { section: "by_len", algo: algo.name(), key: l.to_string(), count, mean_us });
    }
    rows
}

pub fn write_csv<W: Write>(w: &mut W, rows: &[CsvRow]) -> io::Result<()> {
    writeln!(w, "section,algo,key,count,mean_us")?;
    for r in rows {
        writeln!(w, "{},{},{},{},{:.3}", r.section, r.algo, r.key, r.count, r.mean_us)?;
    }
    Ok(())
}

/// Deterministic query manifest: everything about the run except timings.
pub fn write_manifest<W: Write>(w: &mut W, queries: &[ClassifiedQuery]) -> io::Result<()> {
    writeln!(w, "id\tquery\tlength\tf\tnf")?;
    for (i, q) in queries.iter().enumerate() {
        writeln!(
            w,
            "{}\t{}\t{}\t{}\t{}",
            i,
            netfreq::all_nf::escape_bytes(&q.query),
            q.query.len(),
            q.freq,
            q.nf
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(mode: BenchMode, count: usize, seed: u64) -> BenchSpec {
        BenchSpec { mode, min_len: 5, max_len: 35, count, seed }
    }

    #[test]
    fn token_queries_are_deterministic_and_bounded() {
        let text = Text::from_bytes(b"the quick brown fox jumps over the lazy dog the end").unwrap();
        let s = spec(BenchMode::TokenConcat { delimiter: b' ' }, 50, 9);
        let a = generate_queries(&text, &s).unwrap();
        let b = generate_queries(&text, &s).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|q| q.len() >= 5 && q.len() <= 35));
        // every query is a substring starting and ending at token boundaries
        for q in &a {
            assert!(!q.starts_with(b" ") && !q.ends_with(b" "));
        }
    }

    #[test]
    fn token_queries_cover_whole_tokens() {
        let text = Text::from_bytes(b"aa bb cc dd ee").unwrap();
        // min_len 5 forces multi-token queries like "aa bb"
        let s = spec(BenchMode::TokenConcat { delimiter: b' ' }, 20, 3);
        let qs = generate_queries(&text, &s).unwrap();
        assert!(qs.iter().all(|q| q.len() == 5 || q.len() == 8 || q.len() == 11 || q.len() == 14));
    }

    #[test]
    fn random_span_queries() {
        let text = Text::from_bytes(b"acgtacgtacgtacgtacgtacgt").unwrap();
        let s = spec(BenchMode::RandomSpan, 40, 11);
        let qs = generate_queries(&text, &s).unwrap();
        assert_eq!(qs.len(), 40);
        assert!(qs.iter().all(|q| q.len() >= 5 && q.len() <= 24));
        let raw = text.raw();
        for q in &qs {
            assert!(raw.windows(q.len()).any(|w| w == q.as_slice()));
        }
    }

    #[test]
    fn impossible_bounds_are_rejected() {
        let text = Text::from_bytes(b"abc").unwrap();
        let s = spec(BenchMode::RandomSpan, 5, 1);
        assert!(generate_queries(&text, &s).is_err());
        let t = spec(BenchMode::TokenConcat { delimiter: b' ' }, 5, 1);
        assert!(generate_queries(&text, &t).is_err());
    }

    #[test]
    fn algo_list_parsing() {
        assert_eq!(Algo::parse_list("crl,asa,hsa").unwrap(), vec![Algo::Crl, Algo::Asa, Algo::Hsa]);
        assert_eq!(Algo::parse_list("hsa").unwrap(), vec![Algo::Hsa]);
        assert!(Algo::parse_list("xyz").is_err());
    }

    #[test]
    fn threaded_measurement_covers_every_query() {
        let text = Text::from_bytes(b"abc abc def abc ghi def abc jkl def mno abc ").unwrap();
        let idx = netfreq::SuffixIndex::build(text);
        let crl = netfreq::CrlIndex::build(&idx);
        let s = BenchSpec {
            mode: BenchMode::TokenConcat { delimiter: b' ' },
            min_len: 3,
            max_len: 12,
            count: 30,
            seed: 4,
        };
        let queries = generate_queries(idx.text(), &s).unwrap();
        let classified = classify_queries(&idx, queries);
        for threads in [1, 2, 3] {
            let times = measure(&idx, &crl, &classified, Algo::Crl, threads);
            assert_eq!(times.len(), classified.len());
            assert!(times.iter().all(|&t| t > 0.0));
        }
    }

    #[test]
    fn aggregation_counts_classes() {
        let queries = vec![
            ClassifiedQuery { query: b"aaaaa".to_vec(), freq: 3, nf: 1 },
            ClassifiedQuery { query: b"bbbbb".to_vec(), freq: 1, nf: 0 },
            ClassifiedQuery { query: b"ccccccc".to_vec(), freq: 2, nf: 0 },
        ];
        let times = vec![1.0, 2.0, 3.0];
        let rows = aggregate(Algo::Asa, &queries, &times);
        let summary: Vec<_> = rows.iter().filter(|r| r.section == "summary").collect();
        assert_eq!(summary[0].count, 3); // all
        assert_eq!(summary[1].count, 2); // f >= 2
        assert_eq!(summary[2].count, 1); // nf > 0
        assert!((summary[1].mean_us - 2.0).abs() < 1e-9);
    }
}
