//! Corpus-level quantities: totals over the positive-NF multiset, the delta
//! repetitiveness measure, BWT run count, and the irreducible LCP sum.

use serde::Serialize;

use crate::all_nf::NfMultiset;
use crate::index::SuffixIndex;

/// `max over k of S(k) / k`, where `S(k)` counts distinct length-`k`
/// substrings as the index sees them (sentinel included). Kept exact as a
/// fraction; `value` is the floating-point rendering.
#[derive(Debug, Clone, Copy, Serialize, PartialEq)]
pub struct DeltaMeasure {
    pub num: u64,
    pub den: u64,
    pub value: f64,
}

/// Measures of a text and its positive-NF multiset.
#[derive(Debug, Clone, Serialize)]
pub struct CorpusStats {
    pub n: usize,
    pub sigma: usize,
    /// Number of distinct strings with positive NF.
    pub distinct_pos_nf: usize,
    /// Sum of net frequencies; never exceeds `n`.
    pub sum_nf: usize,
    /// Sum of lengths over the distinct positive-NF strings.
    pub big_n: usize,
    /// Sum of `nf * length` over the positive-NF strings.
    pub big_l: usize,
    pub delta: DeltaMeasure,
    /// Number of equal-letter runs in the BWT.
    pub bwt_runs: usize,
    /// Sum of LCP values at rows whose BWT character differs from the
    /// previous row's (row 1 counts as irreducible, value 0).
    pub irr_lcp_sum: usize,
}

/// Computes every field; `multiset` must come from ALL-NF over the same text.
pub fn compute_stats(idx: &SuffixIndex, multiset: &NfMultiset) -> CorpusStats {
    let n = idx.n();
    let sigma = idx.text().sigma();
    let sum_nf = multiset.total_nf();
    let distinct_pos_nf = multiset.len();
    let big_n = multiset.total_length();
    let big_l = multiset.weighted_length();
    let irr_lcp_sum = irreducible_lcp_sum(idx);
    let (delta, s1) = delta_measure(idx);
    let bwt_runs = bwt_run_count(idx);

    assert!(sum_nf <= n, "sum of net frequencies exceeds n");
    assert!(distinct_pos_nf <= n, "distinct positive-NF strings exceed n");
    assert!(big_n <= big_l, "every positive NF is at least 1");
    assert!(big_l <= 2 * irr_lcp_sum, "weighted length exceeds twice the irreducible LCP sum");
    assert_eq!(s1, sigma, "distinct length-1 substrings must equal sigma");
    // delta is a max over S(k)/k, so it is at least S(1)/1 = sigma
    assert!(delta.num >= sigma as u64 * delta.den);

    CorpusStats { n, sigma, distinct_pos_nf, sum_nf, big_n, big_l, delta, bwt_runs, irr_lcp_sum }
}

/// Sum of the irreducible LCP values: rows `2..=n` where the BWT character
/// changes, plus row 1 (always irreducible, value 0).
pub fn irreducible_lcp_sum(idx: &SuffixIndex) -> usize {
    let n = idx.n();
    (2..=n).filter(|&r| idx.bwt(r - 1) != idx.bwt(r)).map(|r| idx.lcp(r)).sum()
}

fn bwt_run_count(idx: &SuffixIndex) -> usize {
    let n = idx.n();
    1 + (2..=n).filter(|&r| idx.bwt(r - 1) != idx.bwt(r)).count()
}

/// Exact maximum of `S(k)/k` via the LCP histogram identity:
/// `S(k) = (n - k + 1) - #{rows with lcp >= k}`.
fn delta_measure(idx: &SuffixIndex) -> (DeltaMeasure, usize) {
    let n = idx.n();
    let mut hist = vec![0u64; n + 1];
    for r in 2..=n {
        hist[idx.lcp(r)] += 1;
    }
    // count_ge[k] = number of rows with lcp >= k
    let mut count_ge = vec![0u64; n + 2];
    for k in (0..=n).rev() {
        count_ge[k] = count_ge[k + 1] + hist[k];
    }
    let mut best_num = 0u64;
    let mut best_den = 1u64;
    let mut s1 = 0usize;
    for (k, &ge) in count_ge.iter().enumerate().take(n + 1).skip(1) {
        let s_k = (n - k + 1) as u64 - ge;
        if k == 1 {
            s1 = s_k as usize;
        }
        // s_k / k > best_num / best_den, compared exactly
        if (s_k as u128) * (best_den as u128) > (best_num as u128) * (k as u128) {
            best_num = s_k;
            best_den = k as u64;
        }
    }
    let delta =
        DeltaMeasure { num: best_num, den: best_den, value: best_num as f64 / best_den as f64 };
    (delta, s1)
}
