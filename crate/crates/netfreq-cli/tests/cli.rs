//! End-to-end tests of the `netfreq` binary: flag handling, output formats,
//! and exit codes.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU64, Ordering};

fn netfreq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netfreq")).args(args).output().expect("spawn netfreq")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

static DIR_SEQ: AtomicU64 = AtomicU64::new(0);

fn scratch_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "netfreq-cli-test-{}-{}",
        std::process::id(),
        DIR_SEQ.fetch_add(1, Ordering::Relaxed)
    ));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn query_worked_example_all_algorithms() {
    for algo in ["crl", "asa", "hsa"] {
        let out = netfreq(&["query", "--text", "rstkstcastarstast", "--pattern", "st", "--algo", algo]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), "nf=1 f=5\n", "algo {}", algo);
    }
}

#[test]
fn query_with_oracle_cross_check() {
    let out = netfreq(&[
        "query", "--text", "rstkstcastarstast", "--pattern", "sta", "--algo", "asa", "--oracle",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("nf=2 f=2\n"));
    assert!(stdout(&out).contains("oracle_definition=2 oracle_characteristic=2"));
}

#[test]
fn query_absent_pattern() {
    let out = netfreq(&["query", "--text", "ab", "--pattern", "c", "--algo", "hsa"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "nf=0 f=0\n");
}

#[test]
fn query_rejects_bad_escape() {
    let out = netfreq(&["query", "--text", "ab", "--pattern", "\\x4g", "--algo", "crl"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn query_rejects_sentinel_pattern() {
    let out = netfreq(&["query", "--text", "ab", "--pattern", "\\x00", "--algo", "crl"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn build_then_query_from_index() {
    let dir = scratch_dir();
    let input = dir.join("input.txt");
    let index = dir.join("input.nfix");
    fs::write(&input, b"rstkstcastarstast").unwrap();

    let out = netfreq(&["build", "--input", input.to_str().unwrap(), "--output", index.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stdout(&out).starts_with("n=18 sigma=7"));

    let out = netfreq(&["query", "--index", index.to_str().unwrap(), "--pattern", "st"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), "nf=1 f=5\n");
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn build_rejects_sentinel_in_input() {
    let dir = scratch_dir();
    let input = dir.join("bad.bin");
    fs::write(&input, b"ab\x00cd").unwrap();
    let out = netfreq(&["build", "--input", input.to_str().unwrap(), "--output", dir.join("x.nfix").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("sentinel collision"));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn build_from_fib_word() {
    let dir = scratch_dir();
    let index = dir.join("fib.nfix");
    let out = netfreq(&["build", "--fib", "20", "--output", index.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("n=6766 ")); // f(20) + 1
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn all_extract_direct_tsv() {
    let out = netfreq(&["all", "--text", "rstkstcastarstast"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "ast\t2\t-1\t-1\nrst\t2\t-1\t-1\nst\t1\t-1\t-1\nsta\t2\t-1\t-1\n");
    assert!(stderr(&out).contains("strings=4 sum_nf=7 big_n=11 big_l=20"));
}

#[test]
fn all_report_spans_decode() {
    let out = netfreq(&["all", "--fib", "7", "--mode", "report", "--algo", "traverse"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    let first = lines.next().unwrap();
    assert!(first.starts_with("abaab\t1\t"));
    let second = lines.next().unwrap();
    assert!(second.starts_with("abaaba\t2\t"));
    assert!(lines.next().is_none());
}

#[test]
fn all_report_requires_traverse() {
    let out = netfreq(&["all", "--text", "aa", "--mode", "report", "--algo", "direct"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn all_empty_output_for_repeat_free_text() {
    let out = netfreq(&["all", "--text", "ab"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "");
}

#[test]
fn all_min_len_filters_at_emission() {
    let out = netfreq(&["all", "--text", "rstkstcastarstast", "--min-len", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "ast\t2\t-1\t-1\nrst\t2\t-1\t-1\nsta\t2\t-1\t-1\n");
    // summary still reflects the unfiltered multiset
    assert!(stderr(&out).contains("sum_nf=7"));
    assert!(stderr(&out).contains("emitted=3"));
}

#[test]
fn all_json_format() {
    let out = netfreq(&["all", "--text", "aa", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["string"], "a");
    assert_eq!(v["nf"], 2);
}

#[test]
fn stats_json_fields() {
    let out = netfreq(&["stats", "--text", "rstkstcastarstast"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n"], 18);
    assert_eq!(v["sum_nf"], 7);
    assert_eq!(v["big_n"], 11);
    assert_eq!(v["big_l"], 20);
}

#[test]
fn stats_with_length_bound_emits_second_record() {
    let out = netfreq(&["stats", "--text", "rstkstcastarstast", "--length-ub", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 2);
    let bounded: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(bounded["distinct_pos_nf"], 1); // only "st" is short enough
    assert_eq!(bounded["big_n"], 2);
}

#[test]
fn fib_prints_word() {
    let out = netfreq(&["fib", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "abaab\n");
}

#[test]
fn fib_out_of_range() {
    let out = netfreq(&["fib", "100"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fib_verify_record() {
    let out = netfreq(&["fib", "7", "--verify"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["total_net_occurrences"], 3);
    assert_eq!(v["nf_border"], 1);
    assert_eq!(v["nf_s_word"], 2);
}

#[test]
fn bench_emits_csv_and_manifest() {
    let dir = scratch_dir();
    let corpus = dir.join("corpus.txt");
    fs::write(&corpus, b"aaa bbb aaa ccc aaa bbb ddd aaa eee fff aaa bbb ggg hhh ").unwrap();
    let manifest = dir.join("queries.tsv");
    let out = netfreq(&[
        "bench",
        "--input",
        corpus.to_str().unwrap(),
        "--count",
        "25",
        "--seed",
        "7",
        "--min-len",
        "3",
        "--max-len",
        "12",
        "--queries-out",
        manifest.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let csv = stdout(&out);
    assert!(csv.starts_with("section,algo,key,count,mean_us\n"));
    assert!(csv.contains("summary,crl,all,25,"));
    assert!(csv.contains("summary,hsa,f_ge_2,"));
    let manifest_text = fs::read_to_string(&manifest).unwrap();
    assert_eq!(manifest_text.lines().count(), 26); // header + 25 queries
    assert!(manifest_text.starts_with("id\tquery\tlength\tf\tnf\n"));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn bench_env_seed_overrides_flag() {
    let dir = scratch_dir();
    let corpus = dir.join("corpus.txt");
    fs::write(&corpus, b"alpha beta gamma delta alpha beta epsilon zeta alpha eta ").unwrap();
    let run = |env: Option<&str>, path: &PathBuf| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_netfreq"));
        cmd.args([
            "bench",
            "--input",
            corpus.to_str().unwrap(),
            "--count",
            "10",
            "--seed",
            "1",
            "--queries-out",
            path.to_str().unwrap(),
        ]);
        if let Some(seed) = env {
            cmd.env("NF_SEED", seed);
        }
        let out = cmd.output().unwrap();
        assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    };
    let base = dir.join("q1.tsv");
    let same = dir.join("q2.tsv");
    let overridden = dir.join("q3.tsv");
    run(None, &base);
    run(None, &same);
    run(Some("99"), &overridden);
    assert_eq!(fs::read(&base).unwrap(), fs::read(&same).unwrap());
    assert_ne!(fs::read(&base).unwrap(), fs::read(&overridden).unwrap());
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn index_load_rejects_garbage() {
    let dir = scratch_dir();
    let bogus = dir.join("bogus.nfix");
    fs::write(&bogus, b"not an index at all").unwrap();
    let out = netfreq(&["query", "--index", bogus.to_str().unwrap(), "--pattern", "a"]);
    assert_eq!(out.status.code(), Some(1));
    fs::remove_dir_all(dir).unwrap();
}
